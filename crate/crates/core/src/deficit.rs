//! Rajagopal–Rendell quantum deficit.
//!
//! The deficit of a bipartite state `ρ` is the relative entropy
//! `S(ρ || ρ^d)` between `ρ` and its classically decohered counterpart
//! `ρ^d = Σ_ab P_ab |a,b><a,b|`, where `{|a>}` and `{|b>}` are eigenbases of
//! the two marginals and `P_ab = <a,b|ρ|a,b>`. Because `ρ^d` is diagonal in
//! that product basis the relative entropy reduces to
//! `Σ λ ln λ - Σ P ln P`.
//!
//! When a marginal has a repeated non-zero eigenvalue its eigenbasis is not
//! unique. Inside each such block the basis is rotated to minimize the
//! diagonal entropy `-Σ P ln P`; the resulting deficit is basis independent
//! and, for pure states, equals the entanglement entropy of the cut.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    binary_entropy, c, hermitian_eig, kron, partial_trace, shannon, xlnx, CMatrix, Complex,
    EigenSystem, PROB_CLAMP,
};
use crate::states::{density_of, PureState};

const TRACE_TOL: f64 = 1e-9;
const NEGATIVITY_TOL: f64 = 1e-9;
const ENTROPY_DECREASE_TOL: f64 = 1e-10;
const MAX_PASSES: usize = 500;
const THETA_GRID: usize = 16;
const PHI_GRID: usize = 16;
const SEARCH_STEP_MIN: f64 = 1e-12;
const SEARCH_MAX_ITER: usize = 4000;

/// A bipartition of a register's qubits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    side_a: Vec<usize>,
    side_b: Vec<usize>,
}

impl Cut {
    /// `side_a` against the remaining qubits of an `n`-qubit register.
    pub fn new(n_qubits: usize, side_a: &[usize]) -> Result<Self> {
        let side_b: Vec<usize> = (0..n_qubits).filter(|q| !side_a.contains(q)).collect();
        Self::split(n_qubits, side_a, &side_b)
    }

    pub fn split(n_qubits: usize, side_a: &[usize], side_b: &[usize]) -> Result<Self> {
        let mut all: Vec<usize> = side_a.iter().chain(side_b).copied().collect();
        all.sort_unstable();
        if side_a.is_empty() || side_b.is_empty() {
            return Err(Error::InvalidCut("both sides must be non-empty".into()));
        }
        if all != (0..n_qubits).collect::<Vec<_>>() {
            return Err(Error::InvalidCut(format!(
                "{side_a:?} | {side_b:?} does not partition {n_qubits} qubits"
            )));
        }
        Ok(Self {
            side_a: side_a.to_vec(),
            side_b: side_b.to_vec(),
        })
    }

    pub fn side_a(&self) -> &[usize] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[usize] {
        &self.side_b
    }
}

/// Spectrum, decohered diagonal and deficit for one bipartite cut.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeficitReport {
    /// Eigenvalues of `ρ`, descending, with values below `1e-12` set to 0.
    pub eigenvalues_rho: Vec<f64>,
    /// `P_ab` in `a`-major order over the chosen product eigenbasis.
    pub decohered_diagonal: Vec<f64>,
    pub deficit: f64,
    /// Set when a marginal has a repeated non-zero eigenvalue.
    pub degenerate_marginal: bool,
}

/// The product eigenbasis selected for decoherence and the resulting
/// probabilities.
#[derive(Clone, Debug)]
pub struct Decoherence {
    /// Columns are the eigenvectors `|a>` of `ρ_A`.
    pub basis_a: CMatrix,
    /// Columns are the eigenvectors `|b>` of `ρ_B`.
    pub basis_b: CMatrix,
    /// `P_ab`, index `a * d_B + b`.
    pub probabilities: Vec<f64>,
    pub degenerate_marginal: bool,
}

impl Decoherence {
    /// `ρ^d` in the computational basis.
    pub fn matrix(&self) -> CMatrix {
        let product = kron(&self.basis_a, &self.basis_b).expect("marginal dims already checked");
        let n = product.rows();
        let mut out = CMatrix::zeros(n, n);
        for (k, &p) in self.probabilities.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let add = product.get(i, k) * product.get(j, k).conj() * p;
                    out.set(i, j, out.get(i, j) + add);
                }
            }
        }
        out
    }
}

fn check_dims(rho: &CMatrix, dims: [usize; 2]) -> Result<()> {
    if !rho.is_square() {
        return Err(Error::NotSquare {
            rows: rho.rows(),
            cols: rho.cols(),
        });
    }
    if dims[0] == 0 || dims[1] == 0 || dims[0] * dims[1] != rho.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} is not {dims:?}",
            rho.rows(),
            rho.cols()
        )));
    }
    Ok(())
}

/// Checks unit trace and positivity; returns the spectrum.
fn density_spectrum(rho: &CMatrix) -> Result<EigenSystem> {
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
        return Err(Error::InvalidDensity(format!("trace {tr}")));
    }
    let eig = hermitian_eig(rho)?;
    if let Some(&low) = eig.eigenvalues.last() {
        if low < -NEGATIVITY_TOL {
            return Err(Error::InvalidDensity(format!("eigenvalue {low:e}")));
        }
    }
    Ok(eig)
}

/// `<a,b|ρ|a,b>` for every column pair of the two bases, clamped at zero.
fn product_diagonal(rho: &CMatrix, basis_a: &CMatrix, basis_b: &CMatrix) -> Vec<f64> {
    let (da, db) = (basis_a.rows(), basis_b.rows());
    let mut out = Vec::with_capacity(da * db);
    let mut v = vec![c(0.0, 0.0); da * db];
    for a in 0..da {
        for b in 0..db {
            for i in 0..da {
                for j in 0..db {
                    v[i * db + j] = basis_a.get(i, a) * basis_b.get(j, b);
                }
            }
            let mut acc = Complex::new(0.0, 0.0);
            for (r, vr) in v.iter().enumerate() {
                if *vr == c(0.0, 0.0) {
                    continue;
                }
                let row: Complex = v.iter().enumerate().map(|(s, vs)| rho.get(r, s) * vs).sum();
                acc += vr.conj() * row;
            }
            out.push(acc.re.max(0.0));
        }
    }
    out
}

fn diagonal_entropy(p: &[f64]) -> f64 {
    -p.iter().map(|&x| xlnx(x.min(1.0))).sum::<f64>()
}

/// Degenerate blocks of a marginal that carry weight; rotations inside a
/// null block cannot change any `P_ab`.
fn weighted_blocks(eig: &EigenSystem) -> Vec<Vec<usize>> {
    eig.degenerate_blocks()
        .into_iter()
        .filter(|r| r.len() > 1 && eig.eigenvalues[r.start] > PROB_CLAMP)
        .map(|r| r.collect())
        .collect()
}

#[derive(Clone, Copy)]
enum Side {
    A,
    B,
}

fn rotated(basis: &CMatrix, i: usize, j: usize, theta: f64, phi: f64) -> CMatrix {
    let (ct, st) = (theta.cos(), theta.sin());
    let e = Complex::from_polar(1.0, phi);
    let mut out = basis.clone();
    for r in 0..basis.rows() {
        let (ui, uj) = (basis.get(r, i), basis.get(r, j));
        out.set(r, i, ui * ct + e * uj * st);
        out.set(r, j, -e.conj() * ui * st + uj * ct);
    }
    out
}

/// Minimizes the diagonal entropy over `U(2)` rotations of columns `i`, `j`
/// of one basis: a coarse grid in `(θ, φ)` followed by a shrinking pattern
/// search. Returns the best rotation and its entropy.
fn best_pair_rotation(
    rho: &CMatrix,
    basis_a: &CMatrix,
    basis_b: &CMatrix,
    side: Side,
    i: usize,
    j: usize,
) -> (f64, f64, f64) {
    let entropy = |theta: f64, phi: f64| -> f64 {
        let p = match side {
            Side::A => product_diagonal(rho, &rotated(basis_a, i, j, theta, phi), basis_b),
            Side::B => product_diagonal(rho, basis_a, &rotated(basis_b, i, j, theta, phi)),
        };
        diagonal_entropy(&p)
    };
    let half_pi = std::f64::consts::FRAC_PI_2;
    let two_pi = 2.0 * std::f64::consts::PI;

    let mut best = (0.0, 0.0, entropy(0.0, 0.0));
    for ti in 1..=THETA_GRID {
        let theta = half_pi * ti as f64 / THETA_GRID as f64;
        for pi in 0..PHI_GRID {
            let phi = two_pi * pi as f64 / PHI_GRID as f64;
            let h = entropy(theta, phi);
            if h < best.2 {
                best = (theta, phi, h);
            }
        }
    }

    let mut step_t = half_pi / THETA_GRID as f64 / 2.0;
    let mut step_p = two_pi / PHI_GRID as f64 / 2.0;
    let mut iterations = 0;
    while step_t > SEARCH_STEP_MIN && iterations < SEARCH_MAX_ITER {
        iterations += 1;
        let (t0, p0, _) = best;
        let trials = [
            (t0 + step_t, p0),
            (t0 - step_t, p0),
            (t0, p0 + step_p),
            (t0, p0 - step_p),
        ];
        let mut moved = false;
        for (t, p) in trials {
            let h = entropy(t, p);
            if h < best.2 {
                best = (t, p, h);
                moved = true;
            }
        }
        if !moved {
            step_t *= 0.5;
            step_p *= 0.5;
        }
    }
    best
}

/// Selects the product eigenbasis and computes `P_ab`.
pub fn decoherence(rho: &CMatrix, dims: [usize; 2]) -> Result<Decoherence> {
    check_dims(rho, dims)?;
    density_spectrum(rho)?;
    decoherence_unchecked(rho, dims)
}

fn decoherence_unchecked(rho: &CMatrix, dims: [usize; 2]) -> Result<Decoherence> {
    let eig_a = hermitian_eig(&partial_trace(rho, &dims, &[0])?)?;
    let eig_b = hermitian_eig(&partial_trace(rho, &dims, &[1])?)?;
    let blocks_a = weighted_blocks(&eig_a);
    let blocks_b = weighted_blocks(&eig_b);

    let mut basis_a = eig_a.eigenvectors;
    let mut basis_b = eig_b.eigenvectors;
    let mut probabilities = product_diagonal(rho, &basis_a, &basis_b);
    let degenerate_marginal = !(blocks_a.is_empty() && blocks_b.is_empty());

    if degenerate_marginal {
        let mut current = diagonal_entropy(&probabilities);
        for _ in 0..MAX_PASSES {
            let mut improved = false;
            for (side, blocks) in [(Side::A, &blocks_a), (Side::B, &blocks_b)] {
                for block in blocks {
                    for (x, &i) in block.iter().enumerate() {
                        for &j in &block[x + 1..] {
                            let (theta, phi, h) =
                                best_pair_rotation(rho, &basis_a, &basis_b, side, i, j);
                            if current - h > ENTROPY_DECREASE_TOL {
                                match side {
                                    Side::A => basis_a = rotated(&basis_a, i, j, theta, phi),
                                    Side::B => basis_b = rotated(&basis_b, i, j, theta, phi),
                                }
                                current = h;
                                improved = true;
                            }
                        }
                    }
                }
            }
            if !improved {
                break;
            }
        }
        probabilities = product_diagonal(rho, &basis_a, &basis_b);
    }

    Ok(Decoherence {
        basis_a,
        basis_b,
        probabilities,
        degenerate_marginal,
    })
}

/// The classically decohered counterpart `ρ^d`, in the computational basis.
pub fn decohere(rho: &CMatrix, dims: [usize; 2]) -> Result<CMatrix> {
    Ok(decoherence(rho, dims)?.matrix())
}

/// Deficit of a bipartite density matrix with subsystem dimensions `dims`.
pub fn rrqd(rho: &CMatrix, dims: [usize; 2]) -> Result<DeficitReport> {
    check_dims(rho, dims)?;
    let spectrum = density_spectrum(rho)?;
    let eigenvalues_rho: Vec<f64> = spectrum
        .eigenvalues
        .iter()
        .map(|&l| if l < PROB_CLAMP { 0.0 } else { l.min(1.0) })
        .collect();
    let dec = decoherence_unchecked(rho, dims)?;
    let deficit = shannon(&dec.probabilities)? - shannon(&eigenvalues_rho)?;
    Ok(DeficitReport {
        eigenvalues_rho,
        decohered_diagonal: dec.probabilities,
        deficit,
        degenerate_marginal: dec.degenerate_marginal,
    })
}

/// Deficit of a pure state across `cut`, each side treated as one
/// composite subsystem.
pub fn rrqd_cut(psi: &PureState, cut: &Cut) -> Result<DeficitReport> {
    let n = psi.n_qubits();
    if cut.side_a.len() + cut.side_b.len() != n {
        return Err(Error::InvalidCut(format!(
            "cut covers {} qubits, state has {n}",
            cut.side_a.len() + cut.side_b.len()
        )));
    }
    let order: Vec<usize> = cut.side_a.iter().chain(&cut.side_b).copied().collect();
    let grouped = psi.permute_qubits(&order)?;
    let dims = [1usize << cut.side_a.len(), 1usize << cut.side_b.len()];
    rrqd(&density_of(&grouped), dims)
}

fn two_spinor_root(theta: f64) -> f64 {
    (6.0 + 4.0 * theta.cos() - (2.0 * theta).cos())
        .max(0.0)
        .sqrt()
}

/// Closed-form single-qubit marginal spectrum of the two-spinor family,
/// `(3 ± √(6 + 4cos θ - cos 2θ)) / 6`, descending.
pub fn two_spinor_marginal_eigs(theta: f64) -> (f64, f64) {
    let s = two_spinor_root(theta);
    ((3.0 + s) / 6.0, (3.0 - s) / 6.0)
}

/// Closed-form decohered diagonal `(P11, P12, P21, P22)` of the two-qubit
/// marginal of the two-spinor family, in the marginal eigenbasis ordered as
/// [`two_spinor_marginal_eigs`].
pub fn two_spinor_decohered_diag(theta: f64) -> [f64; 4] {
    let cos = theta.cos();
    let s2 = 6.0 + 4.0 * cos - (2.0 * theta).cos();
    let s = s2.sqrt();
    let tail = 9.0 * (2.0 + cos) / s2;
    let p11 = (14.0 + cos + 4.0 * s - tail) / 24.0;
    let p12 = (2.0 + cos) * (theta / 2.0).sin().powi(4) / (3.0 * s2);
    let p22 = (14.0 + cos - 4.0 * s - tail) / 24.0;
    [p11, p12, p12, p22]
}

/// Closed-form `D_A:BC` of the two-spinor family: the entropy of the
/// single-qubit marginal.
pub fn two_spinor_dabc(theta: f64) -> f64 {
    binary_entropy(two_spinor_marginal_eigs(theta).0)
}

/// `(x+y) ln(x+y) - x ln x - y ln y`: the deficit of a two-qubit state with
/// spectrum `{x+y, 1-x-y}` whose decohered diagonal is `{x, y, 1-x-y}`.
pub fn merge_deficit(x: f64, y: f64) -> f64 {
    xlnx(x + y) - xlnx(x) - xlnx(y)
}

/// Closed-form pairwise deficits `(D_AB, D_AC)` of
/// `a|100> + b|010> + c|001>`.
///
/// Tracing out C leaves the spectrum `{|a|²+|b|², |c|²}` and decohered
/// diagonal `{|a|², |b|², |c|²}`, so `D_AB` merges `|a|²` with `|b|²`;
/// likewise `D_AC` merges `|a|²` with `|c|²`.
pub fn gen_w_pair_deficits(a_mag: f64, b_mag: f64, c_mag: f64) -> (f64, f64) {
    let (a2, b2, c2) = (a_mag * a_mag, b_mag * b_mag, c_mag * c_mag);
    (merge_deficit(a2, b2), merge_deficit(a2, c2))
}

/// Closed-form `D_A:BC` of `a|000> + b|111>`.
pub fn gen_ghz_dabc(a_mag: f64) -> f64 {
    binary_entropy(a_mag * a_mag)
}

//! Majorana representation of permutation-symmetric qubit states.
//!
//! A symmetric `N`-qubit state is, up to normalization, the symmetrized
//! product of `N` single-qubit spinors. The number of distinct spinors and
//! their multiplicities (the degeneracy configuration) label the SLOCC class
//! of the state: for three qubits `D_3`, `D_{2,1}` and `D_{1,1,1}`.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, Complex};
use crate::poly;
use crate::states::{binomial, PureState, MAX_QUBITS};

/// Two spinors are identified when `|<s|t>| >= 1 - tol`.
pub const DEFAULT_OVERLAP_TOL: f64 = 1e-8;

const SYMMETRY_TOL: f64 = 1e-10;
const LEADING_ZERO_TOL: f64 = 1e-12;

/// A point on the Bloch sphere:
/// `cos(β/2) e^{-iα/2} |0> + sin(β/2) e^{iα/2} |1>`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spinor {
    pub beta: f64,
    pub alpha: f64,
}

impl Spinor {
    pub fn new(beta: f64, alpha: f64) -> Self {
        Self {
            beta,
            alpha: alpha.rem_euclid(2.0 * PI) + 0.0,
        }
    }

    /// `|0>`, the north pole.
    pub fn up() -> Self {
        Self::new(0.0, 0.0)
    }

    /// `|1>`, the south pole.
    pub fn down() -> Self {
        Self::new(PI, 0.0)
    }

    /// The spinor proportional to `u|0> + v|1>`; the global phase is dropped.
    pub fn from_amplitudes(u: Complex, v: Complex) -> Self {
        let beta = 2.0 * v.norm().atan2(u.norm());
        let alpha = if u.norm() == 0.0 || v.norm() == 0.0 {
            0.0
        } else {
            v.arg() - u.arg()
        };
        Self::new(beta, alpha)
    }

    pub fn amplitudes(&self) -> (Complex, Complex) {
        let (h, a) = (self.beta / 2.0, self.alpha / 2.0);
        (
            Complex::from_polar(h.cos(), -a),
            Complex::from_polar(h.sin(), a),
        )
    }

    /// `|<self|other>|`.
    pub fn overlap(&self, other: &Self) -> f64 {
        let (u1, v1) = self.amplitudes();
        let (u2, v2) = other.amplitudes();
        (u1.conj() * u2 + v1.conj() * v2).norm()
    }
}

/// Multiplicities of the distinct spinors, in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyConfig {
    pub multiplicities: Vec<usize>,
}

impl DegeneracyConfig {
    pub fn distinct(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn total(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// `D_3`, `D_{2,1}`, `D_{1,1,1}`, ...
    pub fn label(&self) -> String {
        match self.multiplicities.as_slice() {
            [n] => format!("D_{n}"),
            parts => {
                let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                format!("D_{{{}}}", inner.join(","))
            }
        }
    }
}

impl fmt::Display for DegeneracyConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// SLOCC class of a symmetric state together with its distinct spinors.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SloccClass {
    pub label: String,
    pub config: DegeneracyConfig,
    /// One representative per distinct spinor, with its multiplicity.
    pub spinors: Vec<(Spinor, usize)>,
}

/// Symmetrized, normalized product of the given spinors.
pub fn symmetrize(spinors: &[Spinor]) -> Result<PureState> {
    let n = spinors.len();
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::OutOfRange(format!(
            "{n} spinors; between 1 and {MAX_QUBITS} supported"
        )));
    }
    // elementary symmetric sums of the spinor amplitudes: coefficient of t^k
    // in prod_l (u_l + v_l t)
    let mut elem = vec![c(0.0, 0.0); n + 1];
    elem[0] = c(1.0, 0.0);
    for (l, s) in spinors.iter().enumerate() {
        let (u, v) = s.amplitudes();
        for k in (0..=l + 1).rev() {
            let shifted = if k > 0 { elem[k - 1] * v } else { c(0.0, 0.0) };
            elem[k] = elem[k] * u + shifted;
        }
    }
    // summing over all n! orderings puts k!(n-k)! e_k on each weight-k basis
    // state; dropping the common n! leaves e_k / C(n, k)
    let per_weight: Vec<Complex> = (0..=n).map(|k| elem[k] / binomial(n, k)).collect();
    let amps: Vec<Complex> = (0..1usize << n)
        .map(|i| per_weight[i.count_ones() as usize])
        .collect();
    let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
    assert!(
        norm_sq.sqrt() >= 1e-12,
        "symmetrized product of unit spinors cannot vanish"
    );
    PureState::normalized(n, amps)
}

/// True when every adjacent qubit transposition leaves the amplitudes
/// unchanged (within `1e-10`).
pub fn is_symmetric(psi: &PureState) -> bool {
    let n = psi.n_qubits();
    let amps = psi.amplitudes();
    (0..n.saturating_sub(1)).all(|q| {
        let hi = 1usize << (n - 1 - q);
        let lo = hi >> 1;
        (0..amps.len()).all(|i| {
            let (bh, bl) = (i & hi != 0, i & lo != 0);
            if bh == bl {
                return true;
            }
            let j = i ^ hi ^ lo;
            (amps[i] - amps[j]).norm() <= SYMMETRY_TOL
        })
    })
}

/// Decomposes a symmetric state into its `N` Majorana spinors.
///
/// The spinors are the roots `z` of
/// `Σ_k (-1)^k √C(N,k) c_k z^(N-k)` mapped to `(|0> + z|1>)/√(1+|z|²)`,
/// where `c_k` is the amplitude on the `k`-excitation Dicke state. Each
/// vanishing leading coefficient contributes one `|1>` spinor.
pub fn majorana_spinors(psi: &PureState) -> Result<Vec<Spinor>> {
    if !is_symmetric(psi) {
        return Err(Error::NotSymmetric);
    }
    let n = psi.n_qubits();
    let amps = psi.amplitudes();
    // (-1)^k √C(N,k) c_k = (-1)^k C(N,k) a_k with a_k the amplitude of any
    // single weight-k basis state
    let coeffs: Vec<Complex> = (0..=n)
        .map(|k| {
            let a_k = amps[(1usize << k) - 1];
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            a_k * (sign * binomial(n, k))
        })
        .collect();
    let scale = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let deficit = coeffs
        .iter()
        .take_while(|z| z.norm() <= LEADING_ZERO_TOL * scale)
        .count();

    let mut spinors = vec![Spinor::down(); deficit];
    if deficit < n {
        for z in poly::roots(&coeffs[deficit..])? {
            spinors.push(Spinor::from_amplitudes(c(1.0, 0.0), z));
        }
    }
    Ok(spinors)
}

/// Groups spinors whose overlap is at least `1 - tol`, closing the relation
/// transitively, and returns the sorted multiplicities.
pub fn degeneracy_config(spinors: &[Spinor], tol: f64) -> DegeneracyConfig {
    let clusters = cluster(spinors, tol);
    let mut multiplicities: Vec<usize> = clusters.iter().map(Vec::len).collect();
    multiplicities.sort_unstable_by(|a, b| b.cmp(a));
    DegeneracyConfig { multiplicities }
}

/// Clusters in order of first appearance.
fn cluster(spinors: &[Spinor], tol: f64) -> Vec<Vec<usize>> {
    let n = spinors.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if spinors[i].overlap(&spinors[j]) >= 1.0 - tol {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, members)) => members.push(i),
            None => groups.push((root, vec![i])),
        }
    }
    groups.into_iter().map(|(_, m)| m).collect()
}

/// Majorana decomposition followed by degeneracy clustering.
pub fn slocc_class(psi: &PureState) -> Result<SloccClass> {
    slocc_class_with_tol(psi, DEFAULT_OVERLAP_TOL)
}

pub fn slocc_class_with_tol(psi: &PureState, tol: f64) -> Result<SloccClass> {
    let spinors = majorana_spinors(psi)?;
    let mut groups: Vec<(Spinor, usize)> = cluster(&spinors, tol)
        .into_iter()
        .map(|members| (spinors[members[0]], members.len()))
        .collect();
    groups.sort_by_key(|g| std::cmp::Reverse(g.1));
    let config = degeneracy_config(&spinors, tol);
    Ok(SloccClass {
        label: config.label(),
        config,
        spinors: groups,
    })
}

/// Number of partitions of `n` into exactly `r` positive parts.
pub fn partition_count(n: usize, r: usize) -> Result<u64> {
    if r == 0 || r > n {
        return Err(Error::OutOfRange(format!(
            "partitions of {n} into {r} parts"
        )));
    }
    // table[m][k] = p(m, k), p(m, k) = p(m-1, k-1) + p(m-k, k)
    let mut table = vec![vec![0u64; r + 1]; n + 1];
    table[0][0] = 1;
    for m in 1..=n {
        for k in 1..=r.min(m) {
            table[m][k] = table[m - 1][k - 1] + table[m - k][k];
        }
    }
    Ok(table[n][r])
}

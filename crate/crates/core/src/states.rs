//! Pure qubit states in the computational basis.
//!
//! Basis index `i` of an `n`-qubit state is the binary number `q_A q_B ...`
//! with qubit A as the most significant bit, so `|100>` has index 4.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, CMatrix, Complex};

/// Largest register handled by the state constructors.
pub const MAX_QUBITS: usize = 10;

const NORM_TOL: f64 = 1e-10;
const PARAM_NORM_TOL: f64 = 1e-9;

/// A normalized state vector over `n` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<Complex>,
}

impl PureState {
    /// Validates length and normalization; does not renormalize.
    pub fn new(n_qubits: usize, amplitudes: Vec<Complex>) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::OutOfRange(format!(
                "qubit count {n_qubits} not in 1..={MAX_QUBITS}"
            )));
        }
        if amplitudes.len() != 1 << n_qubits {
            return Err(Error::DimensionMismatch(format!(
                "{} amplitudes for {n_qubits} qubits",
                amplitudes.len()
            )));
        }
        if amplitudes
            .iter()
            .any(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::Parse("non-finite amplitude".into()));
        }
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Rescales an arbitrary non-zero vector to unit norm.
    pub fn normalized(n_qubits: usize, amplitudes: Vec<Complex>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm.is_nan() || norm <= 1e-300 {
            return Err(Error::NotNormalized {
                norm_sq: norm * norm,
            });
        }
        Self::new(n_qubits, amplitudes.into_iter().map(|z| z / norm).collect())
    }

    /// `|0...0>`.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        Self::basis(n_qubits, 0)
    }

    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS || index >= 1 << n_qubits {
            return Err(Error::OutOfRange(format!(
                "basis state {index} of {n_qubits} qubits"
            )));
        }
        let mut amps = vec![c(0.0, 0.0); 1 << n_qubits];
        amps[index] = c(1.0, 0.0);
        Self::new(n_qubits, amps)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amplitudes
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Complex {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `|<self|other>|`.
    pub fn fidelity(&self, other: &Self) -> f64 {
        self.inner(other).norm()
    }

    /// Reorders qubits: qubit `order[k]` of `self` becomes qubit `k` of the
    /// result.
    pub fn permute_qubits(&self, order: &[usize]) -> Result<Self> {
        let n = self.n_qubits;
        let mut seen = vec![false; n];
        if order.len() != n
            || order
                .iter()
                .any(|&q| q >= n || std::mem::replace(&mut seen[q], true))
        {
            return Err(Error::InvalidCut(format!(
                "{order:?} is not a permutation of {n} qubits"
            )));
        }
        let mut amps = vec![c(0.0, 0.0); self.dim()];
        for (old, &z) in self.amplitudes.iter().enumerate() {
            let mut new = 0;
            for (k, &q) in order.iter().enumerate() {
                let bit = (old >> (n - 1 - q)) & 1;
                new |= bit << (n - 1 - k);
            }
            amps[new] = z;
        }
        Ok(Self {
            n_qubits: n,
            amplitudes: amps,
        })
    }

    /// Applies the same single-qubit unitary to every qubit.
    pub fn apply_to_all(&self, u: &CMatrix) -> Result<Self> {
        let us = vec![u.clone(); self.n_qubits];
        self.apply_local(&us)
    }

    /// Applies `u[k]` to qubit `k`.
    pub fn apply_local(&self, us: &[CMatrix]) -> Result<Self> {
        if us.len() != self.n_qubits || us.iter().any(|u| u.rows() != 2 || u.cols() != 2) {
            return Err(Error::DimensionMismatch(
                "one 2x2 operator per qubit required".into(),
            ));
        }
        let n = self.n_qubits;
        let mut amps = self.amplitudes.clone();
        for (q, u) in us.iter().enumerate() {
            let stride = 1 << (n - 1 - q);
            for i in 0..amps.len() {
                if i & stride == 0 {
                    let (a0, a1) = (amps[i], amps[i | stride]);
                    amps[i] = u.get(0, 0) * a0 + u.get(0, 1) * a1;
                    amps[i | stride] = u.get(1, 0) * a0 + u.get(1, 1) * a1;
                }
            }
        }
        Self::normalized(n, amps)
    }
}

/// `(cos(θ/2)|000> + sin(θ/2)(|100> + |010> + |001>)/√3)`, the symmetric
/// three-qubit state with two distinct Majorana spinors in canonical form.
///
/// `θ` must lie in `[0, π]`; at the endpoints the state degenerates to
/// `|000>` and the W state.
pub fn two_spinor_family(theta: f64) -> Result<PureState> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::OutOfRange(format!("theta = {theta} not in [0, π]")));
    }
    let a = (theta / 2.0).cos();
    let b = (theta / 2.0).sin() / 3f64.sqrt();
    let mut amps = vec![c(0.0, 0.0); 8];
    amps[0] = c(a, 0.0);
    for i in [1, 2, 4] {
        amps[i] = c(b, 0.0);
    }
    PureState::new(3, amps)
}

/// `(|000> + |111>)/√2`.
pub fn ghz() -> PureState {
    let mut amps = vec![c(0.0, 0.0); 8];
    amps[0] = c(FRAC_1_SQRT_2, 0.0);
    amps[7] = c(FRAC_1_SQRT_2, 0.0);
    PureState::new(3, amps).expect("GHZ is normalized")
}

fn uniform_over(indices: &[usize]) -> PureState {
    let v = 1.0 / (indices.len() as f64).sqrt();
    let mut amps = vec![c(0.0, 0.0); 8];
    for &i in indices {
        amps[i] = c(v, 0.0);
    }
    PureState::new(3, amps).expect("uniform superposition is normalized")
}

/// `(|100> + |010> + |001>)/√3`.
pub fn w() -> PureState {
    uniform_over(&[1, 2, 4])
}

/// The bit-flipped W state `(|011> + |101> + |110>)/√3`.
pub fn wbar() -> PureState {
    uniform_over(&[3, 5, 6])
}

/// `(|W> + |W̄>)/√2`.
pub fn wwbar() -> PureState {
    uniform_over(&[1, 2, 3, 4, 5, 6])
}

/// `|a|e^{iα}|000> + |b|e^{iβ}|111>`.
pub fn gen_ghz(a_mag: f64, b_mag: f64, alpha: f64, beta: f64) -> Result<PureState> {
    check_weights(&[a_mag, b_mag])?;
    let mut amps = vec![c(0.0, 0.0); 8];
    amps[0] = Complex::from_polar(a_mag, alpha);
    amps[7] = Complex::from_polar(b_mag, beta);
    PureState::normalized(3, amps)
}

/// `|a|e^{iα}|100> + |b|e^{iβ}|010> + |c|e^{iγ}|001>`.
pub fn gen_w(
    a_mag: f64,
    b_mag: f64,
    c_mag: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
) -> Result<PureState> {
    check_weights(&[a_mag, b_mag, c_mag])?;
    let mut amps = vec![c(0.0, 0.0); 8];
    amps[4] = Complex::from_polar(a_mag, alpha);
    amps[2] = Complex::from_polar(b_mag, beta);
    amps[1] = Complex::from_polar(c_mag, gamma);
    PureState::normalized(3, amps)
}

fn check_weights(mags: &[f64]) -> Result<()> {
    if mags.iter().any(|m| !m.is_finite() || *m < 0.0) {
        return Err(Error::OutOfRange(format!(
            "magnitudes must be finite and non-negative, got {mags:?}"
        )));
    }
    let norm_sq: f64 = mags.iter().map(|m| m * m).sum();
    if (norm_sq - 1.0).abs() > PARAM_NORM_TOL {
        return Err(Error::NotNormalized { norm_sq });
    }
    Ok(())
}

pub(crate) fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// The Dicke state with `k` excitations: the equal superposition of all
/// weight-`k` basis states of `n` qubits.
pub fn dicke(n: usize, k: usize) -> Result<PureState> {
    if n == 0 || n > MAX_QUBITS || k > n {
        return Err(Error::OutOfRange(format!(
            "Dicke state with {k} excitations of {n} qubits"
        )));
    }
    let v = 1.0 / binomial(n, k).sqrt();
    let amps = (0..1usize << n)
        .map(|i| {
            if i.count_ones() as usize == k {
                c(v, 0.0)
            } else {
                c(0.0, 0.0)
            }
        })
        .collect();
    PureState::normalized(n, amps)
}

/// `|ψ><ψ|`.
pub fn density_of(psi: &PureState) -> CMatrix {
    CMatrix::outer(&psi.amplitudes)
}

/// Builds a state from its name: `ghz`, `w`, `wbar`, `wwbar`, `product`,
/// `two-spinor:<theta>`, `gen-ghz:<|a|>,<|b|>,<alpha>,<beta>`,
/// `gen-w:<|a|>,<|b|>,<|c|>,<alpha>,<beta>,<gamma>` or `dicke:<n>,<k>`.
pub fn named(spec: &str) -> Result<PureState> {
    let (name, args) = match spec.split_once(':') {
        Some((n, a)) => (n.trim(), Some(a)),
        None => (spec.trim(), None),
    };
    let nums = |expected: usize| -> Result<Vec<f64>> {
        let raw = args.ok_or_else(|| Error::Parse(format!("state '{name}' needs parameters")))?;
        let vals = raw
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Parse(format!("bad number '{s}': {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if vals.len() != expected {
            return Err(Error::Parse(format!(
                "state '{name}' takes {expected} parameters, got {}",
                vals.len()
            )));
        }
        Ok(vals)
    };
    let bare = |s: PureState| -> Result<PureState> {
        if args.is_some() {
            return Err(Error::Parse(format!("state '{name}' takes no parameters")));
        }
        Ok(s)
    };
    match name.to_ascii_lowercase().as_str() {
        "ghz" => bare(ghz()),
        "w" => bare(w()),
        "wbar" => bare(wbar()),
        "wwbar" => bare(wwbar()),
        "product" | "000" => bare(PureState::zero(3)?),
        "two-spinor" | "psi" => two_spinor_family(nums(1)?[0]),
        "gen-ghz" => {
            let v = nums(4)?;
            gen_ghz(v[0], v[1], v[2], v[3])
        }
        "gen-w" => {
            let v = nums(6)?;
            gen_w(v[0], v[1], v[2], v[3], v[4], v[5])
        }
        "dicke" => {
            let v = nums(2)?;
            if v.iter().any(|x| x.fract() != 0.0 || *x < 0.0) {
                return Err(Error::Parse("dicke parameters must be integers".into()));
            }
            dicke(v[0] as usize, v[1] as usize)
        }
        other => Err(Error::Parse(format!("unknown state '{other}'"))),
    }
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    n: usize,
    amplitudes: Vec<[f64; 2]>,
}

impl PureState {
    /// Parses `{"n": 3, "amplitudes": [[re, im], ...]}`. A bare amplitude
    /// array is also accepted; the qubit count is then inferred.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let parsed: StateJson = if value.is_array() {
            let amplitudes: Vec<[f64; 2]> = serde_json::from_value(value)?;
            let len = amplitudes.len();
            if len < 2 || !len.is_power_of_two() {
                return Err(Error::Parse(format!(
                    "{len} amplitudes is not a power of two"
                )));
            }
            StateJson {
                n: len.trailing_zeros() as usize,
                amplitudes,
            }
        } else {
            serde_json::from_value(value)?
        };
        Self::new(
            parsed.n,
            parsed
                .amplitudes
                .iter()
                .map(|&[re, im]| c(re, im))
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        let doc = StateJson {
            n: self.n_qubits,
            amplitudes: self.amplitudes.iter().map(|z| [z.re, z.im]).collect(),
        };
        serde_json::to_string(&doc).expect("state serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_eig, partial_trace};

    fn close(a: &PureState, expected: &[f64]) -> bool {
        a.amplitudes()
            .iter()
            .zip(expected)
            .all(|(z, &e)| (z - c(e, 0.0)).norm() < 1e-14)
    }

    #[test]
    fn two_spinor_endpoints_and_midpoint() {
        assert!(two_spinor_family(PI).unwrap().fidelity(&w()) > 1.0 - 1e-15);
        assert!(close(
            &two_spinor_family(0.0).unwrap(),
            &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]
        ));
        let s2 = FRAC_1_SQRT_2;
        let s6 = 1.0 / 6f64.sqrt();
        assert!(close(
            &two_spinor_family(PI / 2.0).unwrap(),
            &[s2, s6, s6, 0.0, s6, 0.0, 0.0, 0.0]
        ));
        assert!(two_spinor_family(-0.1).is_err());
        assert!(two_spinor_family(PI + 1e-9).is_err());
    }

    #[test]
    fn canonical_states() {
        let h = FRAC_1_SQRT_2;
        assert!(close(&ghz(), &[h, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, h]));
        let s6 = 1.0 / 6f64.sqrt();
        assert!(close(&wwbar(), &[0.0, s6, s6, s6, s6, s6, s6, 0.0]));
        assert_eq!(w().inner(&wbar()), c(0.0, 0.0));
    }

    #[test]
    fn generalized_ghz() {
        let h = FRAC_1_SQRT_2;
        assert!(gen_ghz(h, h, 0.0, 0.0).unwrap().fidelity(&ghz()) > 1.0 - 1e-15);
        assert_eq!(
            gen_ghz(1.0, 0.0, 0.0, 0.0).unwrap(),
            PureState::zero(3).unwrap()
        );
        assert!(matches!(
            gen_ghz(0.6, 0.6, 0.0, 0.0),
            Err(Error::NotNormalized { .. })
        ));

        let rho = density_of(&gen_ghz(0.6, 0.8, 0.3, 1.2).unwrap());
        let rho_a = partial_trace(&rho, &[2, 2, 2], &[0]).unwrap();
        assert!(rho_a.max_abs_diff(&CMatrix::from_diag(&[0.36, 0.64])) < 1e-14);
    }

    #[test]
    fn generalized_w() {
        let s3 = 1.0 / 3f64.sqrt();
        assert!(gen_w(s3, s3, s3, 0.0, 0.0, 0.0).unwrap().fidelity(&w()) > 1.0 - 1e-15);
        assert_eq!(
            gen_w(1.0, 0.0, 0.0, 0.0, 0.0, 0.0).unwrap(),
            PureState::basis(3, 4).unwrap()
        );
        assert!(gen_w(0.6, 0.6, 0.6, 0.0, 0.0, 0.0).is_err());

        // tracing qubit C leaves {|c|^2, |a|^2 + |b|^2}
        let rho = density_of(&gen_w(0.6, 0.48, 0.64, 0.0, 0.0, 0.0).unwrap());
        let rho_ab = partial_trace(&rho, &[2, 2, 2], &[0, 1]).unwrap();
        let eig = hermitian_eig(&rho_ab).unwrap();
        assert!((eig.eigenvalues[0] - 0.5904).abs() < 1e-12);
        assert!((eig.eigenvalues[1] - 0.4096).abs() < 1e-12);
        assert!(eig.eigenvalues[2].abs() < 1e-12 && eig.eigenvalues[3].abs() < 1e-12);
    }

    #[test]
    fn dicke_states() {
        assert!(dicke(3, 1).unwrap().fidelity(&w()) > 1.0 - 1e-15);
        assert_eq!(dicke(3, 0).unwrap(), PureState::zero(3).unwrap());
        let d42 = dicke(4, 2).unwrap();
        let s6 = 1.0 / 6f64.sqrt();
        for (i, z) in d42.amplitudes().iter().enumerate() {
            let expected = if i.count_ones() == 2 { s6 } else { 0.0 };
            assert!((z - c(expected, 0.0)).norm() < 1e-15);
        }
        assert!(dicke(3, 4).is_err());
        assert!(dicke(11, 1).is_err());
    }

    #[test]
    fn density_is_rank_one_projector() {
        let rho = density_of(&ghz());
        assert!((rho.trace().re - 1.0).abs() < 1e-15);
        assert!((rho.purity() - 1.0).abs() < 1e-15);
        let one_qubit = density_of(&PureState::zero(1).unwrap());
        assert_eq!(one_qubit, CMatrix::from_diag(&[1.0, 0.0]));
    }

    #[test]
    fn wwbar_pair_marginal() {
        let rho = density_of(&wwbar());
        let rho_ab = partial_trace(&rho, &[2, 2, 2], &[0, 1]).unwrap();
        let expected = CMatrix::from_real(
            4,
            4,
            &[
                1., 1., 1., 0., 1., 2., 2., 1., 1., 2., 2., 1., 0., 1., 1., 1.,
            ],
        )
        .unwrap()
        .scale(1.0 / 6.0);
        assert!(rho_ab.max_abs_diff(&expected) < 1e-15);
        let rho_a = partial_trace(&rho, &[2, 2, 2], &[0]).unwrap();
        let expected_a = CMatrix::from_real(2, 2, &[3., 2., 2., 3.])
            .unwrap()
            .scale(1.0 / 6.0);
        assert!(rho_a.max_abs_diff(&expected_a) < 1e-15);
    }

    #[test]
    fn permute_qubits_moves_bits() {
        // |100> with qubits reordered (C, A, B) becomes |010>
        let s = PureState::basis(3, 4)
            .unwrap()
            .permute_qubits(&[2, 0, 1])
            .unwrap();
        assert_eq!(s, PureState::basis(3, 2).unwrap());
        assert!(PureState::zero(3)
            .unwrap()
            .permute_qubits(&[0, 0, 1])
            .is_err());
    }

    #[test]
    fn named_states() {
        assert_eq!(named("ghz").unwrap(), ghz());
        assert_eq!(named("WWbar").unwrap(), wwbar());
        assert_eq!(
            named("two-spinor:1.0").unwrap(),
            two_spinor_family(1.0).unwrap()
        );
        assert_eq!(named("dicke:3,1").unwrap(), dicke(3, 1).unwrap());
        assert!(named("gen-w:0.6,0.48,0.64,0,0,0").is_ok());
        assert!(named("ghz:1").is_err());
        assert!(named("nope").is_err());
        assert!(named("gen-ghz:0.6,0.8").is_err());
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let s = wwbar();
        assert_eq!(PureState::from_json(&s.to_json()).unwrap(), s);
        let bare = PureState::from_json("[[1,0],[0,0],[0,0],[0,0]]").unwrap();
        assert_eq!(bare.n_qubits(), 2);
        assert!(matches!(
            PureState::from_json(r#"{"n":1,"amplitudes":[[1,0],[1,0]]}"#),
            Err(Error::NotNormalized { .. })
        ));
        assert!(PureState::from_json(r#"{"n":2,"amplitudes":[[1,0],[0,0]]}"#).is_err());
        assert!(PureState::from_json("not json").is_err());
    }
}

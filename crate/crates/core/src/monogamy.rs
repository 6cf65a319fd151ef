//! Monogamy of the quantum deficit in three-qubit pure states.
//!
//! A state is monogamous with respect to a focus qubit A when
//! `D_AB + D_AC <= D_A:BC`; the score `q = D_AB + D_AC - D_A:BC` is
//! non-positive exactly then. Concurrence and three-tangle are reported
//! alongside to classify the kind of entanglement a state carries.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::deficit::{rrqd, rrqd_cut, Cut};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, partial_trace, CMatrix, Complex};
use crate::majorana::{is_symmetric, slocc_class, SloccClass};
use crate::states::{density_of, gen_ghz, gen_w, ghz, two_spinor_family, w, wwbar, PureState};

/// Half-width of the band around `q = 0` reported as [`Verdict::Boundary`].
pub const VERDICT_TOL: f64 = 1e-9;

/// Threshold above which τ or C counts as present in the entanglement type.
const PRESENCE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Monogamous,
    Polygamous,
    Boundary,
}

impl Verdict {
    pub fn from_q(q: f64) -> Self {
        if q < -VERDICT_TOL {
            Verdict::Monogamous
        } else if q > VERDICT_TOL {
            Verdict::Polygamous
        } else {
            Verdict::Boundary
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Monogamous => "Monogamous",
            Verdict::Polygamous => "Polygamous",
            Verdict::Boundary => "Boundary",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonogamyReport {
    /// Index of the focus qubit (0 = A).
    pub focus: usize,
    pub d_ab: f64,
    pub d_ac: f64,
    pub d_abc: f64,
    /// `d_ab + d_ac - d_abc`.
    pub q: f64,
    pub verdict: Verdict,
    /// Present for permutation-symmetric states only.
    pub slocc_label: Option<SloccClass>,
    pub tau: f64,
    pub concurrence_ab: f64,
    pub concurrence_ac: f64,
}

fn require_three(psi: &PureState) -> Result<()> {
    if psi.n_qubits() != 3 {
        return Err(Error::WrongQubitCount {
            expected: 3,
            actual: psi.n_qubits(),
        });
    }
    Ok(())
}

/// The three deficits entering the monogamy score, without the auxiliary
/// entanglement measures.
pub fn deficits(psi: &PureState, focus: usize) -> Result<(f64, f64, f64)> {
    let (rho_ab, rho_ac) = focus_pairs(psi, focus)?;
    let d_ab = rrqd(&rho_ab, [2, 2])?.deficit;
    let d_ac = rrqd(&rho_ac, [2, 2])?.deficit;
    let d_abc = rrqd_cut(psi, &Cut::new(3, &[focus])?)?.deficit;
    Ok((d_ab, d_ac, d_abc))
}

fn focus_pairs(psi: &PureState, focus: usize) -> Result<(CMatrix, CMatrix)> {
    require_three(psi)?;
    if focus > 2 {
        return Err(Error::OutOfRange(format!("focus qubit {focus}")));
    }
    let others: Vec<usize> = (0..3).filter(|&q| q != focus).collect();
    let rho = density_of(psi);
    let pair = |other: usize| {
        let mut keep = [focus, other];
        keep.sort_unstable();
        partial_trace(&rho, &[2, 2, 2], &keep)
    };
    Ok((pair(others[0])?, pair(others[1])?))
}

/// Full monogamy report with `focus` playing the role of qubit A.
pub fn q_score(psi: &PureState, focus: usize) -> Result<MonogamyReport> {
    let (rho_ab, rho_ac) = focus_pairs(psi, focus)?;
    let d_ab = rrqd(&rho_ab, [2, 2])?.deficit;
    let d_ac = rrqd(&rho_ac, [2, 2])?.deficit;
    let d_abc = rrqd_cut(psi, &Cut::new(3, &[focus])?)?.deficit;
    let q = d_ab + d_ac - d_abc;
    let slocc_label = if is_symmetric(psi) {
        Some(slocc_class(psi)?)
    } else {
        None
    };
    Ok(MonogamyReport {
        focus,
        d_ab,
        d_ac,
        d_abc,
        q,
        verdict: Verdict::from_q(q),
        slocc_label,
        tau: three_tangle(psi)?,
        concurrence_ab: concurrence(&rho_ab)?,
        concurrence_ac: concurrence(&rho_ac)?,
    })
}

/// Wootters concurrence of a two-qubit density matrix.
///
/// Uses the spectrum of the Hermitian `√ρ ρ̃ √ρ`, which coincides with that
/// of `ρ ρ̃`, with `ρ̃ = (σy⊗σy) ρ* (σy⊗σy)`.
pub fn concurrence(rho: &CMatrix) -> Result<f64> {
    if rho.rows() != 4 || rho.cols() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "concurrence needs a 4x4 matrix, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > 1e-9 || tr.im.abs() > 1e-9 {
        return Err(Error::InvalidDensity(format!("trace {tr}")));
    }
    let eig = hermitian_eig(rho)?;
    if eig.eigenvalues[3] < -1e-9 {
        return Err(Error::InvalidDensity(format!(
            "eigenvalue {:e}",
            eig.eigenvalues[3]
        )));
    }

    let yy = CMatrix::from_real(
        4,
        4,
        &[
            0., 0., 0., -1., //
            0., 0., 1., 0., //
            0., 1., 0., 0., //
            -1., 0., 0., 0.,
        ],
    )?;
    let tilde = yy.matmul(&rho.conj())?.matmul(&yy)?;

    let mut sqrt_rho = CMatrix::zeros(4, 4);
    let v = &eig.eigenvectors;
    for i in 0..4 {
        for j in 0..4 {
            let s: Complex = (0..4)
                .map(|k| v.get(i, k) * eig.eigenvalues[k].max(0.0).sqrt() * v.get(j, k).conj())
                .sum();
            sqrt_rho.set(i, j, s);
        }
    }
    let mut m = sqrt_rho.matmul(&tilde)?.matmul(&sqrt_rho)?;
    // restore exact Hermiticity lost to rounding
    for i in 0..4 {
        for j in i..4 {
            let avg = (m.get(i, j) + m.get(j, i).conj()) * 0.5;
            m.set(i, j, avg);
            m.set(j, i, avg.conj());
        }
    }
    let roots: Vec<f64> = hermitian_eig(&m)?
        .eigenvalues
        .iter()
        .map(|&mu| mu.max(0.0).sqrt())
        .collect();
    Ok((roots[0] - roots[1] - roots[2] - roots[3]).clamp(0.0, 1.0))
}

/// Three-tangle `4 |d1 - 2 d2 + 4 d3|` from Cayley's hyperdeterminant.
pub fn three_tangle(psi: &PureState) -> Result<f64> {
    require_three(psi)?;
    let a = |i: usize, j: usize, k: usize| psi.amplitudes()[4 * i + 2 * j + k];
    let sq = |z: Complex| z * z;
    let d1 = sq(a(0, 0, 0)) * sq(a(1, 1, 1))
        + sq(a(0, 0, 1)) * sq(a(1, 1, 0))
        + sq(a(0, 1, 0)) * sq(a(1, 0, 1))
        + sq(a(1, 0, 0)) * sq(a(0, 1, 1));
    let d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1)
        + a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    let d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1)
        + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    let hyper = d1 - d2 * 2.0 + d3 * 4.0;
    Ok((hyper.norm() * 4.0).clamp(0.0, 1.0))
}

/// Representative θ of the two-spinor family in the summary table.
pub const TABLE_THETA: f64 = PI / 2.0;
/// Generalized GHZ sample `(|a|, |b|, α, β)`.
pub const TABLE_GEN_GHZ: (f64, f64, f64, f64) = (0.6, 0.8, 0.3, 1.2);
/// Generalized W sample `(|a|, |b|, |c|)`, all phases zero.
pub const TABLE_GEN_W: (f64, f64, f64) = (0.6, 0.48, 0.64);

/// Grid resolution used to probe each family for both verdicts.
const FAMILY_PROBE_POINTS: usize = 12;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Sample {
    pub parameters: String,
    pub q: f64,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table1Row {
    pub state: String,
    /// SLOCC label; for non-symmetric families, the label of the symmetric
    /// state they generalize.
    pub slocc: String,
    pub slocc_source: String,
    /// `Monogamous`, `Polygamous`, or `parameter dependent` when a family
    /// shows both.
    pub verdict: String,
    pub samples: Vec<Sample>,
    pub tau: f64,
    pub concurrence: f64,
    pub entanglement_type: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table1 {
    pub rows: Vec<Table1Row>,
    pub notes: Vec<String>,
}

fn entanglement_type(tau: f64, conc: f64) -> &'static str {
    match (tau > PRESENCE_TOL, conc > PRESENCE_TOL) {
        (true, true) => "3-way and 2-way",
        (true, false) => "3-way only",
        (false, true) => "2-way only",
        (false, false) => "none",
    }
}

/// Summarizes a set of observed verdicts; boundary cases do not count.
fn family_verdict<'a>(verdicts: impl IntoIterator<Item = &'a Verdict>) -> String {
    let (mut mono, mut poly) = (false, false);
    for v in verdicts {
        match v {
            Verdict::Monogamous => mono = true,
            Verdict::Polygamous => poly = true,
            Verdict::Boundary => {}
        }
    }
    match (mono, poly) {
        (true, true) => "parameter dependent".into(),
        (true, false) => Verdict::Monogamous.to_string(),
        (false, true) => Verdict::Polygamous.to_string(),
        (false, false) => Verdict::Boundary.to_string(),
    }
}

fn sample(parameters: String, psi: &PureState) -> Result<Sample> {
    let (d_ab, d_ac, d_abc) = deficits(psi, 0)?;
    let q = d_ab + d_ac - d_abc;
    Ok(Sample {
        parameters,
        q,
        verdict: Verdict::from_q(q),
    })
}

fn fixed_row(state: &str, psi: &PureState) -> Result<Table1Row> {
    let report = q_score(psi, 0)?;
    let slocc = report
        .slocc_label
        .as_ref()
        .map(|s| s.label.clone())
        .unwrap_or_else(|| "-".into());
    Ok(Table1Row {
        state: state.into(),
        slocc,
        slocc_source: "Majorana spinors".into(),
        verdict: report.verdict.to_string(),
        samples: vec![Sample {
            parameters: "-".into(),
            q: report.q,
            verdict: report.verdict,
        }],
        tau: report.tau,
        concurrence: report.concurrence_ab,
        entanglement_type: entanglement_type(report.tau, report.concurrence_ab).into(),
    })
}

/// Builds the five-row summary: the two-spinor family, GHZ, WW̄, and the
/// generalized GHZ and W families.
///
/// Family rows report the verdicts observed over a probe grid; the samples
/// list the tabulated representative and the probe point with the smallest
/// score.
pub fn table1() -> Result<Table1> {
    let mut rows = Vec::with_capacity(5);

    // two-spinor family
    let rep = q_score(&two_spinor_family(TABLE_THETA)?, 0)?;
    let mut probe = Vec::new();
    for k in 1..=FAMILY_PROBE_POINTS {
        let theta = PI * k as f64 / (FAMILY_PROBE_POINTS + 1) as f64;
        probe.push(sample(
            format!("theta={theta:.4}"),
            &two_spinor_family(theta)?,
        )?);
    }
    rows.push(family_row(
        "psi(theta)",
        rep.slocc_label
            .map(|s| s.label)
            .unwrap_or_else(|| "-".into()),
        "Majorana spinors".into(),
        Sample {
            parameters: "theta=pi/2".into(),
            q: rep.q,
            verdict: rep.verdict,
        },
        probe,
        rep.tau,
        rep.concurrence_ab,
    ));

    rows.push(fixed_row("GHZ", &ghz())?);
    rows.push(fixed_row("WWbar", &wwbar())?);

    // generalized GHZ
    let (a, b, alpha, beta) = TABLE_GEN_GHZ;
    let psi = gen_ghz(a, b, alpha, beta)?;
    let rep = q_score(&psi, 0)?;
    let mut probe = Vec::new();
    for k in 1..=FAMILY_PROBE_POINTS {
        let a2 = k as f64 / (FAMILY_PROBE_POINTS + 1) as f64;
        probe.push(sample(
            format!("|a|^2={a2:.4}"),
            &gen_ghz(a2.sqrt(), (1.0 - a2).sqrt(), 0.0, 0.0)?,
        )?);
    }
    rows.push(family_row(
        "GHZ_gen",
        slocc_class(&ghz())?.label,
        "symmetric counterpart GHZ".into(),
        Sample {
            parameters: format!("|a|={a}, |b|={b}, alpha={alpha}, beta={beta}"),
            q: rep.q,
            verdict: rep.verdict,
        },
        probe,
        rep.tau,
        rep.concurrence_ab,
    ));

    // generalized W
    let (a, b, cm) = TABLE_GEN_W;
    let psi = gen_w(a, b, cm, 0.0, 0.0, 0.0)?;
    let rep = q_score(&psi, 0)?;
    let n = FAMILY_PROBE_POINTS;
    let mut probe = Vec::new();
    for i in 1..n {
        for j in 1..(n - i) {
            let (a2, b2) = (i as f64 / n as f64, j as f64 / n as f64);
            let c2 = 1.0 - a2 - b2;
            probe.push(sample(
                format!(
                    "|a|={:.4}, |b|={:.4}, |c|={:.4}",
                    a2.sqrt(),
                    b2.sqrt(),
                    c2.sqrt()
                ),
                &gen_w(a2.sqrt(), b2.sqrt(), c2.sqrt(), 0.0, 0.0, 0.0)?,
            )?);
        }
    }
    rows.push(family_row(
        "W_gen",
        slocc_class(&w())?.label,
        "symmetric counterpart W".into(),
        Sample {
            parameters: format!("|a|={a}, |b|={b}, |c|={cm}"),
            q: rep.q,
            verdict: rep.verdict,
        },
        probe,
        rep.tau,
        rep.concurrence_ab,
    ));

    let notes = vec![
        "All entropies use the natural logarithm; qubit A is the focus in every row.".into(),
        "Generalized GHZ: D_AB = D_AC = 0 and q = -H2(|a|^2) <= 0 for every |a|, so these \
         states are monogamous; a reading with q > 0 contradicts the criterion q <= 0."
            .into(),
        "Generalized W: tracing out C leaves eigenvalues {|c|^2, |a|^2+|b|^2}; D_AB merges \
         |a|^2 with |b|^2 and D_AC merges |a|^2 with |c|^2 under the A-most-significant \
         ordering."
            .into(),
        "Generalized W: D_A:BC is the entropy of rho_A and does not depend on the phases.".into(),
    ];
    Ok(Table1 { rows, notes })
}

fn family_row(
    state: &str,
    slocc: String,
    slocc_source: String,
    representative: Sample,
    probe: Vec<Sample>,
    tau: f64,
    conc: f64,
) -> Table1Row {
    let verdict = family_verdict(
        probe
            .iter()
            .map(|s| &s.verdict)
            .chain(std::iter::once(&representative.verdict)),
    );
    let extreme = probe
        .into_iter()
        .min_by(|x, y| x.q.total_cmp(&y.q))
        .expect("probe grid is non-empty");
    Table1Row {
        state: state.into(),
        slocc,
        slocc_source,
        verdict,
        samples: vec![representative, extreme],
        tau,
        concurrence: conc,
        entanglement_type: entanglement_type(tau, conc).into(),
    }
}

impl fmt::Display for Table1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<11} {:<10} {:<20} {:>8} {:>8}  {:<16} samples (q, verdict)",
            "state", "SLOCC", "verdict", "tau", "C", "entanglement"
        )?;
        for row in &self.rows {
            let samples: Vec<String> = row
                .samples
                .iter()
                .map(|s| format!("[{}: q={:+.6}, {}]", s.parameters, s.q, s.verdict))
                .collect();
            writeln!(
                f,
                "{:<11} {:<10} {:<20} {:>8.6} {:>8.6}  {:<16} {}",
                row.state,
                row.slocc,
                row.verdict,
                row.tau,
                row.concurrence,
                row.entanglement_type,
                samples.join(" ")
            )?;
        }
        writeln!(f)?;
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;
    use std::f64::consts::LN_2;

    #[test]
    fn ghz_is_monogamous() {
        let r = q_score(&ghz(), 0).unwrap();
        assert!(r.d_ab.abs() < 1e-10 && r.d_ac.abs() < 1e-10);
        assert!((r.q + LN_2).abs() < 1e-10);
        assert_eq!(r.verdict, Verdict::Monogamous);
        assert_eq!(r.slocc_label.unwrap().label, "D_{1,1,1}");
    }

    #[test]
    fn wwbar_is_polygamous() {
        let r = q_score(&wwbar(), 0).unwrap();
        assert!((r.q - (2.0 * r.d_ab - r.d_abc)).abs() < 1e-10);
        assert!((r.q - 0.3224).abs() < 1e-3);
        assert_eq!(r.verdict, Verdict::Polygamous);
    }

    #[test]
    fn two_spinor_family_is_polygamous() {
        for k in 1..=50 {
            let theta = PI * k as f64 / 51.0;
            let r = q_score(&two_spinor_family(theta).unwrap(), 0).unwrap();
            assert!(r.q > 0.0, "theta={theta}: q={}", r.q);
        }
    }

    #[test]
    fn product_state_is_boundary() {
        let r = q_score(&PureState::zero(3).unwrap(), 0).unwrap();
        assert_eq!(r.verdict, Verdict::Boundary);
        assert_eq!(r.slocc_label.unwrap().label, "D_3");
    }

    #[test]
    fn focus_independence_for_symmetric_states() {
        let psi = two_spinor_family(1.1).unwrap();
        let qs: Vec<f64> = (0..3).map(|f| q_score(&psi, f).unwrap().q).collect();
        assert!((qs[0] - qs[1]).abs() < 1e-10 && (qs[0] - qs[2]).abs() < 1e-10);
    }

    #[test]
    fn rejects_wrong_register() {
        let two = PureState::zero(2).unwrap();
        assert!(matches!(
            q_score(&two, 0),
            Err(Error::WrongQubitCount { .. })
        ));
        assert!(three_tangle(&two).is_err());
        assert!(q_score(&ghz(), 3).is_err());
    }

    fn pair_c(psi: &PureState) -> CMatrix {
        partial_trace(&density_of(psi), &[2, 2, 2], &[0, 1]).unwrap()
    }

    #[test]
    fn concurrence_values() {
        assert!((concurrence(&pair_c(&wwbar())).unwrap() - 1.0 / 3.0).abs() < 1e-6);
        assert!(concurrence(&pair_c(&ghz())).unwrap().abs() < 1e-6);
        assert!((concurrence(&pair_c(&w())).unwrap() - 2.0 / 3.0).abs() < 1e-6);
        // Bell state
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bell = PureState::new(2, vec![c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)]).unwrap();
        assert!((concurrence(&density_of(&bell)).unwrap() - 1.0).abs() < 1e-7);
        assert!(concurrence(&CMatrix::identity(4)).is_err());
    }

    #[test]
    fn three_tangle_values() {
        assert!((three_tangle(&ghz()).unwrap() - 1.0).abs() < 1e-12);
        assert!((three_tangle(&wwbar()).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        assert!(three_tangle(&w()).unwrap().abs() < 1e-12);
        let g = gen_ghz(0.6, 0.8, 0.3, 1.2).unwrap();
        assert!((three_tangle(&g).unwrap() - 4.0 * 0.36 * 0.64).abs() < 1e-12);
    }

    #[test]
    fn verdict_bands() {
        assert_eq!(Verdict::from_q(-1e-3), Verdict::Monogamous);
        assert_eq!(Verdict::from_q(1e-3), Verdict::Polygamous);
        assert_eq!(Verdict::from_q(5e-10), Verdict::Boundary);
    }

    #[test]
    fn report_json_is_snake_case() {
        let json = serde_json::to_value(q_score(&ghz(), 0).unwrap()).unwrap();
        for key in [
            "d_ab",
            "d_ac",
            "d_abc",
            "q",
            "verdict",
            "slocc_label",
            "tau",
            "concurrence_ab",
            "concurrence_ac",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert_eq!(json["verdict"], "Monogamous");
    }

    #[test]
    fn family_verdict_summary() {
        use Verdict::*;
        assert_eq!(
            family_verdict(&[Monogamous, Polygamous]),
            "parameter dependent"
        );
        assert_eq!(family_verdict(&[Polygamous, Boundary]), "Polygamous");
        assert_eq!(family_verdict(&[Boundary]), "Boundary");
    }
}

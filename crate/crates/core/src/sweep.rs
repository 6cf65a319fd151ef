//! Parameter sweeps over the two-spinor and generalized W families, CSV
//! output, and the closed-form self check.

use std::f64::consts::{LN_2, PI};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::deficit::{
    decoherence, gen_ghz_dabc, gen_w_pair_deficits, rrqd, rrqd_cut, two_spinor_dabc,
    two_spinor_decohered_diag, two_spinor_marginal_eigs, Cut,
};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, partial_trace};
use crate::monogamy::{deficits, Verdict};
use crate::states::{density_of, gen_ghz, gen_w, ghz, two_spinor_family, wwbar};

pub const THETA_HEADER: [&str; 5] = ["theta", "d_ab", "d_abc", "q", "verdict"];
pub const GEN_W_HEADER: [&str; 8] = [
    "a_abs",
    "b_abs",
    "phase_delta",
    "d_ab",
    "d_ac",
    "d_abc",
    "q",
    "verdict",
];

pub const DEFAULT_THETA_POINTS: usize = 200;
pub const DEFAULT_THETA_RANGE: (f64, f64) = (0.01 * PI, 0.99 * PI);
pub const DEFAULT_GEN_W_POINTS: usize = 60;
pub const DEFAULT_PHASE_DELTAS: [f64; 3] = [0.0, PI / 2.0, PI];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepKind {
    Theta,
    GenW,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub kind: SweepKind,
    /// θ samples for [`SweepKind::Theta`]; subdivisions of `|a|²` and `|b|²`
    /// for [`SweepKind::GenW`].
    pub grid_points: usize,
    pub theta_range: (f64, f64),
    /// Values of `α - γ` for the generalized W sweep.
    pub phase_deltas: Vec<f64>,
    /// `None` writes to stdout.
    pub output_path: Option<PathBuf>,
}

/// Partial configuration, as read from a JSON file or assembled from flags.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepOverrides {
    pub points: Option<usize>,
    pub theta_min: Option<f64>,
    pub theta_max: Option<f64>,
    pub phase_delta: Option<Vec<f64>>,
    pub out: Option<PathBuf>,
}

impl SweepOverrides {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    /// Fields set in `self` win over those in `base`.
    pub fn over(self, base: SweepOverrides) -> SweepOverrides {
        SweepOverrides {
            points: self.points.or(base.points),
            theta_min: self.theta_min.or(base.theta_min),
            theta_max: self.theta_max.or(base.theta_max),
            phase_delta: self.phase_delta.or(base.phase_delta),
            out: self.out.or(base.out),
        }
    }
}

impl SweepConfig {
    pub fn theta() -> Self {
        SweepConfig {
            kind: SweepKind::Theta,
            grid_points: DEFAULT_THETA_POINTS,
            theta_range: DEFAULT_THETA_RANGE,
            phase_deltas: vec![0.0],
            output_path: None,
        }
    }

    pub fn gen_w() -> Self {
        SweepConfig {
            kind: SweepKind::GenW,
            grid_points: DEFAULT_GEN_W_POINTS,
            theta_range: DEFAULT_THETA_RANGE,
            phase_deltas: DEFAULT_PHASE_DELTAS.to_vec(),
            output_path: None,
        }
    }

    pub fn with_overrides(kind: SweepKind, o: SweepOverrides) -> Result<Self> {
        let mut cfg = match kind {
            SweepKind::Theta => Self::theta(),
            SweepKind::GenW => Self::gen_w(),
        };
        if let Some(n) = o.points {
            cfg.grid_points = n;
        }
        if let Some(lo) = o.theta_min {
            cfg.theta_range.0 = lo;
        }
        if let Some(hi) = o.theta_max {
            cfg.theta_range.1 = hi;
        }
        if let Some(d) = o.phase_delta {
            cfg.phase_deltas = d;
        }
        cfg.output_path = o.out;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid_points < 2 {
            return Err(Error::OutOfRange(format!(
                "grid points must be at least 2, got {}",
                self.grid_points
            )));
        }
        let (lo, hi) = self.theta_range;
        if !(lo.is_finite() && hi.is_finite() && 0.0 <= lo && lo < hi && hi <= PI) {
            return Err(Error::OutOfRange(format!(
                "theta range ({lo}, {hi}) must satisfy 0 <= lo < hi <= pi"
            )));
        }
        if self.phase_deltas.is_empty() || self.phase_deltas.iter().any(|d| !d.is_finite()) {
            return Err(Error::OutOfRange(
                "phase deltas must be finite and non-empty".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThetaRow {
    pub theta: f64,
    pub d_ab: f64,
    pub d_abc: f64,
    pub q: f64,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenWRow {
    pub a_abs: f64,
    pub b_abs: f64,
    pub phase_delta: f64,
    pub d_ab: f64,
    pub d_ac: f64,
    pub d_abc: f64,
    pub q: f64,
    pub verdict: Verdict,
}

/// Evenly spaced θ values including both endpoints of the range.
pub fn theta_grid(cfg: &SweepConfig) -> Vec<f64> {
    let (lo, hi) = cfg.theta_range;
    let n = cfg.grid_points;
    (0..n)
        .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
        .collect()
}

pub fn sweep_theta(cfg: &SweepConfig) -> Result<Vec<ThetaRow>> {
    cfg.validate()?;
    theta_grid(cfg)
        .into_par_iter()
        .map(|theta| {
            let (d_ab, d_ac, d_abc) = deficits(&two_spinor_family(theta)?, 0)?;
            let q = d_ab + d_ac - d_abc;
            Ok(ThetaRow {
                theta,
                d_ab,
                d_abc,
                q,
                verdict: Verdict::from_q(q),
            })
        })
        .collect()
}

/// `(|a|, |b|)` pairs with `|a|² = i/n`, `|b|² = j/n`, `i + j < n`, in
/// row-major order of `(i, j)`.
pub fn gen_w_grid(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in 0..(n - i) {
            out.push(((i as f64 / n as f64).sqrt(), (j as f64 / n as f64).sqrt()));
        }
    }
    out
}

/// Rows are ordered by phase delta, then by grid point.
pub fn sweep_gen_w(cfg: &SweepConfig) -> Result<Vec<GenWRow>> {
    cfg.validate()?;
    let grid = gen_w_grid(cfg.grid_points);
    let jobs: Vec<(f64, f64, f64)> = cfg
        .phase_deltas
        .iter()
        .flat_map(|&d| grid.iter().map(move |&(a, b)| (a, b, d)))
        .collect();
    jobs.into_par_iter()
        .map(|(a, b, delta)| {
            let c = (1.0 - a * a - b * b).max(0.0).sqrt();
            let psi = gen_w(a, b, c, delta, 0.0, 0.0)?;
            let (d_ab, d_ac, d_abc) = deficits(&psi, 0)?;
            let q = d_ab + d_ac - d_abc;
            Ok(GenWRow {
                a_abs: a,
                b_abs: b,
                phase_delta: delta,
                d_ab,
                d_ac,
                d_abc,
                q,
                verdict: Verdict::from_q(q),
            })
        })
        .collect()
}

/// Largest `|D_A:BC(δ) - D_A:BC(0)|` over grid points present at `δ = 0`.
///
/// Returns `None` when the sweep has no zero-phase rows to compare against.
pub fn phase_dependence(rows: &[GenWRow]) -> Option<f64> {
    let base: Vec<&GenWRow> = rows.iter().filter(|r| r.phase_delta == 0.0).collect();
    if base.is_empty() {
        return None;
    }
    let mut worst = 0.0_f64;
    for r in rows.iter().filter(|r| r.phase_delta != 0.0) {
        if let Some(b) = base
            .iter()
            .find(|b| b.a_abs == r.a_abs && b.b_abs == r.b_abs)
        {
            worst = worst.max((r.d_abc - b.d_abc).abs());
        }
    }
    Some(worst)
}

/// `%.12g`-style formatting: 12 significant digits, trailing zeros trimmed,
/// exponent form outside `[1e-5, 1e12)`.
pub fn fmt_sig(x: f64) -> String {
    const SIG: i32 = 12;
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", (SIG - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..SIG).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (SIG - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_theta_csv<W: Write>(rows: &[ThetaRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(THETA_HEADER)?;
    for r in rows {
        w.write_record([
            fmt_sig(r.theta),
            fmt_sig(r.d_ab),
            fmt_sig(r.d_abc),
            fmt_sig(r.q),
            r.verdict.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_gen_w_csv<W: Write>(rows: &[GenWRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(GEN_W_HEADER)?;
    for r in rows {
        w.write_record([
            fmt_sig(r.a_abs),
            fmt_sig(r.b_abs),
            fmt_sig(r.phase_delta),
            fmt_sig(r.d_ab),
            fmt_sig(r.d_ac),
            fmt_sig(r.d_abc),
            fmt_sig(r.q),
            r.verdict.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub max_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn new(name: &'static str, max_error: f64, tolerance: f64) -> Self {
        Check {
            name,
            max_error,
            tolerance,
            passed: max_error <= tolerance,
        }
    }
}

/// Closed-form versus numeric cross validations.
pub fn self_check() -> Result<Vec<Check>> {
    self_check_perturbed(0.0)
}

/// [`self_check`] with `perturbation` added to every closed-form reference
/// value. A non-zero perturbation above the tolerances must make checks fail.
pub fn self_check_perturbed(perturbation: f64) -> Result<Vec<Check>> {
    let p = perturbation;
    let thetas: Vec<f64> = (1..=100).map(|k| PI * k as f64 / 101.0).collect();
    let mut checks = Vec::with_capacity(8);

    let (mut eig_err, mut diag_err, mut cut_err) = (0.0_f64, 0.0_f64, 0.0_f64);
    for &theta in &thetas {
        let psi = two_spinor_family(theta)?;
        let rho = density_of(&psi);
        let rho_ab = partial_trace(&rho, &[2, 2, 2], &[0, 1])?;
        let (l1, l2) = two_spinor_marginal_eigs(theta);
        let rho_a = partial_trace(&rho_ab, &[2, 2], &[0])?;
        let ev = hermitian_eig(&rho_a)?.eigenvalues;
        eig_err = eig_err.max((ev[0] - (l1.max(l2) + p)).abs());
        eig_err = eig_err.max((ev[1] - (l1.min(l2) + p)).abs());

        let dec = decoherence(&rho_ab, [2, 2])?;
        let mut numeric = dec.probabilities.clone();
        let mut closed = two_spinor_decohered_diag(theta).to_vec();
        numeric.sort_by(f64::total_cmp);
        closed.sort_by(f64::total_cmp);
        for (x, y) in numeric.iter().zip(&closed) {
            diag_err = diag_err.max((x - (y + p)).abs());
        }
        if dec.degenerate_marginal {
            diag_err = f64::INFINITY;
        }

        let d = rrqd_cut(&psi, &Cut::new(3, &[0])?)?.deficit;
        cut_err = cut_err.max((d - (two_spinor_dabc(theta) + p)).abs());
    }
    checks.push(Check::new(
        "two-spinor marginal eigenvalues (100 theta)",
        eig_err,
        1e-10,
    ));
    checks.push(Check::new(
        "two-spinor decohered diagonal (100 theta)",
        diag_err,
        1e-8,
    ));
    checks.push(Check::new("two-spinor D_A:BC (100 theta)", cut_err, 1e-8));

    let rho_ab = partial_trace(&density_of(&wwbar()), &[2, 2, 2], &[0, 1])?;
    let exact = [5.0 / 6.0, 1.0 / 6.0]
        .iter()
        .map(|&x: &f64| x * x.ln())
        .sum::<f64>()
        - [0.75, 1.0 / 12.0, 1.0 / 12.0, 1.0 / 12.0]
            .iter()
            .map(|&x: &f64| x * x.ln())
            .sum::<f64>();
    let got = rrqd(&rho_ab, [2, 2])?.deficit;
    checks.push(Check::new(
        "WWbar pair deficit",
        (got - (exact + p)).abs(),
        1e-10,
    ));

    let (d_ab, d_ac, d_abc) = deficits(&ghz(), 0)?;
    let ghz_err = (d_ab - p)
        .abs()
        .max((d_ac - p).abs())
        .max((d_abc - (LN_2 + p)).abs());
    checks.push(Check::new("GHZ deficits", ghz_err, 1e-10));

    let (mut gg_cut, mut gg_pair) = (0.0_f64, 0.0_f64);
    for k in 1..=50 {
        let a2 = k as f64 / 51.0;
        let (alpha, beta) = (0.37 * k as f64, 1.9 - 0.11 * k as f64);
        let psi = gen_ghz(a2.sqrt(), (1.0 - a2).sqrt(), alpha, beta)?;
        let (d_ab, d_ac, d_abc) = deficits(&psi, 0)?;
        gg_cut = gg_cut.max((d_abc - (gen_ghz_dabc(a2.sqrt()) + p)).abs());
        gg_pair = gg_pair.max((d_ab - p).abs()).max((d_ac - p).abs());
    }
    checks.push(Check::new("generalized GHZ D_A:BC (50 |a|)", gg_cut, 1e-10));
    checks.push(Check::new(
        "generalized GHZ pair deficits (50 |a|)",
        gg_pair,
        1e-10,
    ));

    let mut gw_err = 0.0_f64;
    for (a2, b2) in [
        (0.36, 0.2304),
        (0.1, 0.3),
        (0.5, 0.2),
        (0.2, 0.65),
        (0.45, 0.05),
    ] {
        let (a, b) = (f64::sqrt(a2), f64::sqrt(b2));
        let c = (1.0 - a2 - b2).sqrt();
        let psi = gen_w(a, b, c, 0.4, 0.0, 1.3)?;
        let (d_ab, d_ac, _) = deficits(&psi, 0)?;
        let (e_ab, e_ac) = gen_w_pair_deficits(a, b, c);
        gw_err = gw_err
            .max((d_ab - (e_ab + p)).abs())
            .max((d_ac - (e_ac + p)).abs());
    }
    checks.push(Check::new("generalized W pair deficits", gw_err, 1e-8));

    Ok(checks)
}

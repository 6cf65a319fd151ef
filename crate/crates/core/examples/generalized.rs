//! Generalized GHZ and W states: monogamy scores and the phase probe.

use std::collections::BTreeMap;

use rrqd::monogamy::q_score;
use rrqd::states::{gen_ghz, gen_w};
use rrqd::sweep::{phase_dependence, sweep_gen_w, SweepConfig};

pub(crate) fn run_example() -> rrqd::Result<()> {
    for a2 in [0.1, 0.36, 0.5, 0.9] {
        let psi = gen_ghz(f64::sqrt(a2), f64::sqrt(1.0 - a2), 0.3, 1.2)?;
        let r = q_score(&psi, 0)?;
        println!("GHZ_gen |a|^2 = {a2:<4}  q = {:+.6}  {}", r.q, r.verdict);
    }

    let r = q_score(&gen_w(0.6, 0.48, 0.64, 0.0, 0.0, 0.0)?, 0)?;
    println!(
        "W_gen (0.6, 0.48, 0.64): D_AB = {:.6}  D_AC = {:.6}  D_A:BC = {:.6}  q = {:+.6}",
        r.d_ab, r.d_ac, r.d_abc, r.q
    );

    let mut cfg = SweepConfig::gen_w();
    cfg.grid_points = 30;
    let rows = sweep_gen_w(&cfg)?;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for row in rows.iter().filter(|r| r.phase_delta == 0.0) {
        *counts.entry(row.verdict.to_string()).or_default() += 1;
    }
    println!("verdicts over the triangle: {counts:?}");
    if let Some(dev) = phase_dependence(&rows) {
        println!("max |D_A:BC(delta) - D_A:BC(0)| = {dev:.3e}");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

//! q(θ) along the two-spinor family, written as CSV.
//!
//! Pass a path to write the CSV there; otherwise a summary is printed.

use rrqd::sweep::{sweep_theta, write_theta_csv, SweepConfig};

pub(crate) fn run_example() -> rrqd::Result<()> {
    let cfg = SweepConfig::theta();
    let rows = sweep_theta(&cfg)?;
    match std::env::args().nth(1) {
        Some(path) => write_theta_csv(&rows, std::fs::File::create(path)?)?,
        None => {
            let min = rows
                .iter()
                .min_by(|a, b| a.q.total_cmp(&b.q))
                .expect("rows");
            let max = rows
                .iter()
                .max_by(|a, b| a.q.total_cmp(&b.q))
                .expect("rows");
            println!("{} grid points", rows.len());
            println!("min q = {:.6} at theta = {:.4}", min.q, min.theta);
            println!("max q = {:.6} at theta = {:.4}", max.q, max.theta);
            println!("all polygamous: {}", rows.iter().all(|r| r.q > 0.0));
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

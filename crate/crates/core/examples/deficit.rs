//! Quantum deficit of two-qubit marginals and bipartite cuts.

use rrqd::deficit::{decoherence, rrqd, rrqd_cut, Cut};
use rrqd::linalg::partial_trace;
use rrqd::states::{density_of, ghz, w, wwbar};

pub(crate) fn run_example() -> rrqd::Result<()> {
    for (name, psi) in [("GHZ", ghz()), ("W", w()), ("WWbar", wwbar())] {
        let rho_ab = partial_trace(&density_of(&psi), &[2, 2, 2], &[0, 1])?;
        let pair = rrqd(&rho_ab, [2, 2])?;
        let cut = rrqd_cut(&psi, &Cut::new(3, &[0])?)?;
        println!(
            "{name:<6} D_AB = {:.6}  D_A:BC = {:.6}  degenerate marginal: {}",
            pair.deficit, cut.deficit, pair.degenerate_marginal
        );
    }

    let rho_ab = partial_trace(&density_of(&wwbar()), &[2, 2, 2], &[0, 1])?;
    let dec = decoherence(&rho_ab, [2, 2])?;
    println!("WWbar decohered diagonal: {:?}", dec.probabilities);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

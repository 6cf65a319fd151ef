//! Majorana spinors of symmetric states and their SLOCC class.

use std::f64::consts::PI;

use rrqd::majorana::{majorana_spinors, slocc_class, symmetrize, Spinor};
use rrqd::states::{dicke, ghz, two_spinor_family, wwbar, PureState};

pub(crate) fn run_example() -> rrqd::Result<()> {
    let states = [
        ("|000>", PureState::zero(3)?),
        ("W", dicke(3, 1)?),
        ("GHZ", ghz()),
        ("WWbar", wwbar()),
        ("psi(pi/3)", two_spinor_family(PI / 3.0)?),
    ];
    for (name, psi) in &states {
        let class = slocc_class(psi)?;
        println!("{name:<10} {}", class.label);
        for s in majorana_spinors(psi)? {
            println!("    beta = {:.6}  alpha = {:.6}", s.beta, s.alpha);
        }
    }

    let triple = [
        Spinor::new(0.4, 0.1),
        Spinor::new(1.7, 2.2),
        Spinor::new(2.9, 4.0),
    ];
    let psi = symmetrize(&triple)?;
    let back = symmetrize(&majorana_spinors(&psi)?)?;
    println!("roundtrip fidelity: {:.12}", psi.fidelity(&back));
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

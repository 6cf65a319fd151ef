//! Hermitian eigendecomposition, partial trace and entropies.

use rrqd::linalg::{hermitian_eig, partial_trace, shannon, von_neumann_entropy};
use rrqd::states::{density_of, wwbar};
use rrqd::{CMatrix, Complex};

pub(crate) fn run_example() -> rrqd::Result<()> {
    let m = CMatrix::from_vec(
        2,
        2,
        vec![
            Complex::new(2.0, 0.0),
            Complex::new(0.0, 1.0),
            Complex::new(0.0, -1.0),
            Complex::new(2.0, 0.0),
        ],
    )?;
    let eig = hermitian_eig(&m)?;
    println!("eigenvalues of [[2, i], [-i, 2]]: {:?}", eig.eigenvalues);
    println!(
        "reconstruction error: {:.1e}",
        eig.reconstruct().max_abs_diff(&m)
    );

    let rho = density_of(&wwbar());
    let rho_ab = partial_trace(&rho, &[2, 2, 2], &[0, 1])?;
    let rho_a = partial_trace(&rho, &[2, 2, 2], &[0])?;
    println!(
        "spectrum of rho_AB: {:?}",
        hermitian_eig(&rho_ab)?.eigenvalues
    );
    println!("S(rho_A) = {:.6} nats", von_neumann_entropy(&rho_a)?);
    println!("H(1/2, 1/2) = {:.6} nats", shannon(&[0.5, 0.5])?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

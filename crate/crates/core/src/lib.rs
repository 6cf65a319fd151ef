//! Quantum deficit toolkit for few-qubit pure states.
//!
//! The crate computes the Rajagopal–Rendell quantum deficit (the relative
//! entropy between a bipartite state and its classically decohered
//! counterpart), classifies permutation-symmetric three-qubit states by the
//! degeneracy of their Majorana spinors, and scores the monogamy inequality
//! `D_AB + D_AC <= D_A:BC`.
//!
//! All entropies use the natural logarithm.
//!
//! Module map:
//!
//! * [`linalg`] - dense complex matrices, partial trace, Jacobi Hermitian
//!   eigensolver, Shannon entropy.
//! * [`states`] - constructors for the three-qubit states studied here.
//! * [`majorana`] - spinor synthesis and decomposition, SLOCC labels.
//! * [`deficit`] - decoherence, the deficit itself, and closed-form
//!   comparators.
//! * [`monogamy`] - monogamy scores, concurrence, three-tangle, summary table.
//! * [`sweep`] - parameter sweeps, CSV output and the self-check.

pub mod deficit;
pub mod error;
pub mod linalg;
pub mod majorana;
pub mod monogamy;
pub mod poly;
pub mod states;
pub mod sweep;

pub use error::{Error, Result};
pub use linalg::{CMatrix, Complex, EigenSystem};
pub use states::PureState;

//! Wronskian Appell polynomials in exact arithmetic.
//!
//! For an Appell sequence `A` and a partition `λ`, `A_λ` is the Wronskian of
//! `A_{n_1}, …, A_{n_r}` over the degree vector of `λ`, divided by the
//! Vandermonde determinant of that vector. This crate computes `A_λ` three
//! independent ways and checks the identities relating them to symmetric
//! functions, Young's lattice and the Plancherel measure.

pub mod appell;
pub mod cli;
pub mod cyclotomic;
pub mod det;
pub mod error;
pub mod exactpoly;
pub mod partition;
pub mod plancherel;
pub mod symfunc;
pub mod verify;
pub mod wapoly;

pub use appell::{parse_spec, AppellSpec};
pub use error::{Error, Result};
pub use exactpoly::{Poly, Rat};
pub use partition::{partitions_of, Partition, RimHook};

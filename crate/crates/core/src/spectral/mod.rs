//! `A_α` matrices, their spectra, and equitable quotients.

mod matrix;
mod quotient;

pub use matrix::{a_alpha, check_alpha, spectral_radius, SymMatrix};
pub use quotient::{is_equitable, quotient, Partition, QuotientMatrix};

//! Exact integer and rational kernels.

mod int_matrix;
mod poly;
mod rat_matrix;

pub use int_matrix::{char_poly_int, unimodular_inverse, IntMatrix};
pub use poly::{poly_exact_div, PolyZ};
pub use rat_matrix::{rat_solve_dim, RatMatrix};

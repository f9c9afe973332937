//! Exact computations for Coxeter polynomials of one-branch extensions of
//! rectangle posets, Nakayama algebras and the tilting complexes between
//! their derived categories.

#![allow(clippy::needless_range_loop)]

pub mod closed_forms;
pub mod coxeter;
pub mod error;
pub mod exact;
pub mod flip;
pub mod homotopy;
pub mod lgroup;
pub mod poset;

pub use closed_forms::{
    chi_ext1_formula, chi_ext_formula, chi_nakayama_formula, chi_rectangle_expansion, chi_rectangle_formula,
    happel_extension_poly, one_point_step, FormulaReport,
};
pub use coxeter::{
    coxeter_matrix, coxeter_polynomial, euler_form, injective_class, projective_class, tau_twisted_euler, DimVector,
    EulerData,
};
pub use error::{Error, Result};
pub use exact::{char_poly_int, rat_solve_dim, unimodular_inverse, IntMatrix, PolyZ, RatMatrix};
pub use flip::{default_flip_order, flip_cartan, permutation_equivalent};
pub use homotopy::{
    complex_hom_k_dim, ladder_hom_dim, parse_complexes, projective_resolution, tilting_family, validate_word,
    verify_tilting, Flavor, LadderComplex, LadderSpec, TiltingFamily, TiltingReport,
};
pub use lgroup::{auslander_euler, solve_shift_equation, LElement, Target, WeightTriple};
pub use poset::{extension_poset, incidence_cartan, nakayama_cartan, rectangle_poset, ExtensionVariant, Poset};

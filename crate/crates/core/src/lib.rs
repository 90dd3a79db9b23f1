//! Exact Poisson cohomology of linear Poisson structures on the duals of
//! 3-dimensional real Lie algebras.
//!
//! The engine works with polynomial multivector fields on `R^3` with
//! rational coefficients. The Poisson differential `d_π = [π, ·]` of a
//! linear bivector preserves total polynomial degree, so the complex splits
//! into finite pieces `(q, d)` that are handled by exact sparse elimination.
//!
//! ```
//! use poisson3::{cohomology_table, AlgebraKind};
//!
//! let pi = AlgebraKind::Heisenberg.poisson_bivector();
//! let table = cohomology_table(&pi, 3).unwrap();
//! assert_eq!(table.cell(0, 1).dim_h, 1); // the Casimir z
//! ```

pub mod algebra;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod expr;
pub mod lie;
pub mod linalg;
pub mod output;
pub mod verify;

pub use algebra::{
    divergence, modular_vector_field, schouten, Monomial, MultiVector, Polynomial, Rational, RationalPoint,
    Var,
};
pub use cohomology::{
    cohomology_cell, cohomology_table, invariant_cohomology, resonances, CohomologyCell, CohomologyTable,
    Resonance,
};
pub use complex::{differential_matrix, homogeneous_basis, poisson_differential, GradedBasis};
pub use error::{Error, Result};
pub use expr::{format_multivector, parse_multivector, parse_polynomial};
pub use lie::{AlgebraKind, StructureConstants};

//! Exact homological linear algebra for bound quiver algebras.
//!
//! The crate computes quadratic duals, degreewise graded-algebra bases,
//! minimal graded projective resolutions, Ext tables and Koszulity
//! certificates for algebras presented as quivers with quadratic relations,
//! and machine-checks the Hom-dimension identities of graded and non-graded
//! Koszul duality on concrete examples. All arithmetic is exact: rational
//! numbers are arbitrary-precision fractions and prime fields use
//! single-word residues.

pub mod algebra;
pub mod complex;
pub mod corpus;
pub mod dsl;
pub mod error;
pub mod field;
pub mod kfunctor;
pub mod matrix;
pub mod module;
pub mod presentation;
pub mod quiver;
pub mod report;
pub mod resolution;
pub mod subspace;
pub mod symbolic;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use subspace::Subspace;

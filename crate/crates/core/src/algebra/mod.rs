//! Prime-field arithmetic, dense linear algebra and univariate root finding.

pub mod field;
pub mod matrix;
pub mod unipoly;

pub use field::{FieldElement, PrimeField, DEFAULT_PRIME};
pub use matrix::{Echelon, Matrix, RowSpace};
pub use unipoly::{uni_roots, UniPoly};

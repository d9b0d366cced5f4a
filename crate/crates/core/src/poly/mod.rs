//! Sparse multivariate polynomials over F_p.

pub mod monomial;
pub mod multipoly;
pub mod text;

pub use monomial::{binomial, monomials_of_degree, Monomial, MonomialOrder, SortKey, MAX_VARS};
pub use multipoly::{MultiPoly, PolyRing};
pub use text::parse_poly;

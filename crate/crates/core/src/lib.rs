//! Finite-field algebra for linkage of space curves.
//!
//! The crate is layered bottom-up: prime-field linear algebra ([`algebra`]), sparse
//! polynomials ([`poly`]), Gröbner bases and ideal operations ([`groebner`]), Hilbert
//! functions ([`hilbert`]), geometric constructions ([`geometry`]), the linkage engine
//! ([`liaison`]) and the seeded end-to-end constructions ([`pipelines`]).

pub mod algebra;
pub mod error;
pub mod geometry;
pub mod groebner;
pub mod hilbert;
pub mod liaison;
pub mod pipelines;
pub mod poly;
pub mod rng;

pub use error::{Error, Result};

//! Gröbner bases and the ideal operations built on them.

mod basis;
mod engine;
mod ideal;
pub mod io;
mod nf_table;
pub mod ops;

pub use basis::{buchberger, GroebnerBasis};
pub use ideal::Ideal;
pub use nf_table::NormalFormTable;
pub use ops::{
    elimination_ideal, ideal_quotient, intersect, intersect_by_elimination, quotient_by_elimination, saturate,
    saturate_irrelevant,
};

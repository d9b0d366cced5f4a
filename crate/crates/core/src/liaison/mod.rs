//! Linkage: numerical characters, residual curves with their verification battery, the
//! maximal-rank check on the curve side, and certificates.

mod certificate;
mod link;
mod numerics;
mod petri;

pub use certificate::{Certificate, Claim, CAVEAT};
pub use link::{complete_intersection_series, link, link_with, random_link_forms, LinkMeasurements, LinkOptions, LinkageResult};
pub use numerics::{liaison_numerics, LiaisonNumerics, LiaisonSpec, Sigma};
pub use petri::{petri_rank, uninodal_subspace, PetriReport};

//! Geometric constructions over `F_p`: divisor classes on blown-up planes, plane linear
//! systems, interpolation of ideals from point samples, singular schemes, rational points,
//! projections, the Plücker slice and the K3 builder.

mod grassmann;
mod interpolate;
mod k3;
pub mod picard;
mod plane;
mod points;
mod projection;
mod singular;

pub use grassmann::{grassmann_slice, plucker_relations};
pub use interpolate::{interpolate_forms, interpolate_ideal, ParametrizedSurface};
pub use k3::{k3_with_curve, K3WithCurve};
pub use picard::{class_invariants, ClassInvariants, DivisorClass};
pub use plane::{plane_curve_points, plane_system_basis, CurvePointStream, PlaneLinearSystem, PointWithMultiplicity};
pub use points::{normalize_point, random_point, rational_points_dim0};
pub use projection::{project_from_point, Projection};
pub use singular::{is_ordinary_node, jacobian, singular_scheme};

use crate::algebra::PrimeField;
use crate::poly::MultiPoly;

/// A projective point, any representative.
pub type Point = Vec<u32>;

pub(crate) fn vanishes_at(forms: &[MultiPoly], p: &[u32]) -> bool {
    forms.iter().all(|f| f.evaluate(p) == 0)
}

pub(crate) fn is_zero_vector(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// Random linear combinations `Σ c_i f_i` of the given forms.
pub(crate) fn random_combinations(
    rng: &mut crate::rng::Stream,
    field: PrimeField,
    forms: &[MultiPoly],
    k: usize,
) -> Vec<MultiPoly> {
    (0..k)
        .map(|_| {
            forms.iter().fold(forms[0].ring().zero(), |acc, f| {
                acc.add_scaled(f, crate::rng::residue(rng, field))
            })
        })
        .collect()
}

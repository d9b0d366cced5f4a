//! General curves of genus 9 with a general nonspecial line bundle, from plane octics with
//! twelve general nodes re-embedded by adjoint septics through further points of the curve.
//!
//! With `k` extra points the image has degree `32 - k` and spans `P^{28-k}`: 17 points give
//! curves of degree 15 in `P^6`, 19 points curves of degree 13 in `P^4`.

use log::info;

use super::surface::interpolate_curve;
use crate::algebra::PrimeField;
use crate::error::{Error, Result};
use crate::geometry::picard::{class_invariants, ClassInvariants, DivisorClass};
use crate::geometry::{plane_system_basis, random_point, CurvePointStream, ParametrizedSurface, Point, PointWithMultiplicity};
use crate::groebner::Ideal;
use crate::hilbert::HilbertProfile;
use crate::poly::{MultiPoly, PolyRing};
use crate::rng;

const OCTIC: i64 = 8;
const NODES: usize = 12;
const ADJOINT: i64 = 7;

pub struct NodalPlaneModel {
    pub nodes: Vec<Point>,
    pub octic: MultiPoly,
    /// dim of the octics singular at the nodes.
    pub octic_system_dim: usize,
    /// Simple base points of the adjoint system, on the octic.
    pub extra: Vec<Point>,
    /// dim of the septics through the nodes and the extra points.
    pub adjoint_system_dim: usize,
    pub invariants: ClassInvariants,
    pub ideal: Ideal,
    pub profile: HilbertProfile,
}

impl NodalPlaneModel {
    /// `(8; 2^12; 1^k)`: the octic's strict transform on the blow-up of all points.
    pub fn curve_class(extra: usize) -> DivisorClass {
        DivisorClass::new(OCTIC, vec![2; NODES], vec![1; extra])
    }

    /// `(7; 1^12; 1^k)`: adjoint septics through the extra points.
    pub fn embedding_class(extra: usize) -> DivisorClass {
        DivisorClass::new(ADJOINT, vec![1; NODES], vec![1; extra])
    }

    pub fn octic_class() -> DivisorClass {
        DivisorClass::new(OCTIC, vec![2; NODES], vec![])
    }

    pub fn build(field: PrimeField, extra_points: usize, seed: u64) -> Result<Self> {
        let plane = PolyRing::new(field, 3)?;
        let invariants = class_invariants(
            &Self::curve_class(extra_points),
            &DivisorClass::canonical(NODES, extra_points),
            &Self::embedding_class(extra_points),
        )?;
        let mut rng = rng::stream(seed, "octic-nodes");
        let nodes: Vec<Point> = (0..NODES).map(|_| random_point(&mut rng, field, 3)).collect();
        let doubles: Vec<PointWithMultiplicity> = nodes.iter().map(|p| PointWithMultiplicity::new(p.clone(), 2)).collect();
        let octics = plane_system_basis(plane, OCTIC as u32, &doubles)?;
        let octic_system_dim = octics.dim();
        if octic_system_dim as i64 != Self::octic_class().expected_plane_dimension() {
            return Err(Error::UnluckySample(format!("octics with the given nodes form a {octic_system_dim}-dim space")));
        }
        let octic = crate::geometry::random_combinations(&mut rng, field, &octics.basis, 1).remove(0);

        let mut stream = CurvePointStream::new(&octic, seed, "octic-extra-points")?.exclude(&nodes);
        let mut extra: Vec<Point> = Vec::with_capacity(extra_points);
        while extra.len() < extra_points {
            let p = stream
                .next_point(10_000)
                .ok_or(Error::NotEnoughPoints { found: extra.len(), wanted: extra_points })?;
            if !extra.contains(&p) {
                extra.push(p);
            }
        }
        let base: Vec<PointWithMultiplicity> =
            nodes.iter().chain(&extra).map(|p| PointWithMultiplicity::new(p.clone(), 1)).collect();
        let septics = plane_system_basis(plane, ADJOINT as u32, &base)?;
        let adjoint_system_dim = septics.dim();
        if adjoint_system_dim as i64 != Self::embedding_class(extra_points).expected_plane_dimension() {
            return Err(Error::UnluckySample(format!("adjoint system has dimension {adjoint_system_dim}")));
        }
        let map = ParametrizedSurface::new(septics.basis)?;
        let exclude: Vec<Point> = nodes.iter().chain(&extra).cloned().collect();
        let (ideal, profile, _) =
            interpolate_curve(&map, &octic, &exclude, (invariants.degree, invariants.genus), seed)?;
        info!("nodal octic model: ({}, {}) curve in P^{}", invariants.degree, invariants.genus, adjoint_system_dim - 1);
        Ok(NodalPlaneModel { nodes, octic, octic_system_dim, extra, adjoint_system_dim, invariants, ideal, profile })
    }
}

//! A K3 surface of degree 8 in `P^5` containing a curve of degree 10 and genus 3.
//!
//! The curve is a smooth plane quartic `Γ` re-embedded by a general 6-dimensional system of
//! cubics through two of its points; the surface is the complete intersection of the three
//! quadrics containing the curve.

use log::info;

use super::interpolate::{interpolate_ideal, ParametrizedSurface};
use super::plane::{plane_curve_points, plane_system_basis, CurvePointStream, PointWithMultiplicity};
use super::singular::singular_scheme;
use super::{random_combinations, Point};
use crate::algebra::PrimeField;
use crate::error::{Error, Result};
use crate::groebner::{saturate_irrelevant, Ideal};
use crate::hilbert::hilbert_profile;
use crate::poly::{monomials_of_degree, MultiPoly, PolyRing};
use crate::rng;

#[derive(Clone, Debug)]
pub struct K3WithCurve {
    /// The complete intersection of three quadrics.
    pub surface: Ideal,
    /// The curve `L'`.
    pub curve: Ideal,
    /// The plane quartic `Γ`.
    pub quartic: MultiPoly,
    /// The cubics mapping `Γ` onto `L'`.
    pub map: ParametrizedSurface,
    /// The two base points on `Γ`.
    pub base_points: Vec<Point>,
}

pub fn k3_with_curve(field: PrimeField, seed: u64) -> Result<K3WithCurve> {
    let plane = PolyRing::new(field, 3)?;
    let mut rng = rng::stream(seed, "k3-quartic");
    let quartic = MultiPoly::from_terms(
        plane,
        monomials_of_degree(3, 4).into_iter().map(|m| (m, rng::residue(&mut rng, field))).collect(),
    );
    if !singular_scheme(&Ideal::new(plane, vec![quartic.clone()]), 1)?.is_unit() {
        return Err(Error::UnluckySample("plane quartic is singular".into()));
    }
    let base_points = plane_curve_points(&quartic, 2, seed)?;
    let base: Vec<PointWithMultiplicity> = base_points.iter().map(|p| PointWithMultiplicity::new(p.clone(), 1)).collect();
    let cubics = plane_system_basis(plane, 3, &base)?;
    let map = ParametrizedSurface::new(random_combinations(&mut rng, field, &cubics.basis, 6))?;
    let target = map.target_ring();

    let mut stream = CurvePointStream::new(&quartic, seed, "k3-curve-samples")?.exclude(&base_points);
    let mut sampler = || -> Result<Point> {
        loop {
            let p = stream
                .next_point(10_000)
                .ok_or(Error::NotEnoughPoints { found: 0, wanted: 1 })?;
            if let Some(q) = map.apply(&p) {
                return Ok(q);
            }
        }
    };
    let quadrics = interpolate_ideal(target, 2, None, &mut sampler)?;
    if quadrics.len() != 3 {
        return Err(Error::UnluckySample(format!("{} quadrics contain the curve, expected 3", quadrics.len())));
    }
    let cubic_forms = interpolate_ideal(target, 3, None, &mut sampler)?;
    let mut gens = quadrics.clone();
    gens.extend(cubic_forms);
    let curve = Ideal::new(target, gens);
    if saturate_irrelevant(&curve) != curve {
        return Err(Error::Verification { claim: "quadrics and cubics generate the saturated curve ideal".into() });
    }
    let prof = hilbert_profile(&curve, None)?;
    if (prof.dim, prof.degree, prof.pa) != (1, 10, 3) {
        return Err(Error::UnluckySample(format!(
            "curve has (dim, degree, genus) = ({}, {}, {})",
            prof.dim, prof.degree, prof.pa
        )));
    }
    let surface = Ideal::new(target, quadrics);
    if !singular_scheme(&surface, 3)?.is_unit() {
        return Err(Error::UnluckySample("the three quadrics meet in a singular surface".into()));
    }
    if !curve.contains_ideal(&surface) {
        return Err(Error::Verification { claim: "surface contains the curve".into() });
    }
    info!("k3: smooth complete intersection of three quadrics containing a (10, 3) curve");
    Ok(K3WithCurve { surface, curve, quartic, map, base_points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::HilbertSeries;

    #[test]
    fn builds_a_degree_eight_surface() {
        let field = PrimeField::new(10007).unwrap();
        let k3 = k3_with_curve(field, 1).unwrap();
        let hs = HilbertSeries::of(&k3.surface);
        // HP = 4t² + 2: χ(O) = 2, degree 8
        assert_eq!(hs.projective_dim(), 2);
        assert_eq!(hs.degree(), 8);
        for t in 3..8 {
            assert_eq!(hs.value(t), 4 * t * t + 2);
        }
        assert_eq!(k3.curve.dim_in_degree(2), 3);
    }
}

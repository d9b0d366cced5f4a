//! The plane blown up in eleven points, embedded in `P^6` by sextics, and curves on it
//! given by plane models.

use log::info;

use crate::algebra::{Matrix, PrimeField};
use crate::error::{Error, Result};
use crate::geometry::picard::{class_invariants, eleven_points, ClassInvariants, DivisorClass};
use crate::geometry::{
    interpolate_ideal, plane_system_basis, random_point, CurvePointStream, ParametrizedSurface, Point,
    PointWithMultiplicity,
};
use crate::groebner::{saturate_irrelevant, Ideal};
use crate::hilbert::{hilbert_profile, HilbertProfile};
use crate::poly::{binomial, MultiPoly, PolyRing};
use crate::rng;

/// Highest degree in which curve ideals are interpolated before giving up.
const MAX_INTERPOLATION_DEGREE: u32 = 4;

pub struct ElevenPointSurface {
    pub plane: PolyRing,
    /// The double points `l_1..l_5`.
    pub l: Vec<Point>,
    /// The simple points `e_1..e_6`.
    pub e: Vec<Point>,
    pub sextics: ParametrizedSurface,
    /// `dim` of the sextic system.
    pub system_dim: usize,
    /// Quadrics containing the surface.
    pub quadrics: Vec<MultiPoly>,
}

fn collinear(field: PrimeField, a: &[u32], b: &[u32], c: &[u32]) -> bool {
    Matrix::from_rows(field, 3, vec![a.to_vec(), b.to_vec(), c.to_vec()]).rank() < 3
}

impl ElevenPointSurface {
    pub fn build(field: PrimeField, seed: u64) -> Result<Self> {
        let plane = PolyRing::new(field, 3)?;
        let mut rng = rng::stream(seed, "eleven-points");
        let pts: Vec<Point> = (0..11).map(|_| random_point(&mut rng, field, 3)).collect();
        // general position: no three of the eleven points on a line (this covers l_3, l_4, l_5
        // and makes the conic through l_1, l_2, e_1, e_2 and any fifth point irreducible)
        for i in 0..11 {
            for j in i + 1..11 {
                if pts[i] == pts[j] {
                    return Err(Error::Degenerate("two base points coincide".into()));
                }
                for k in j + 1..11 {
                    if collinear(field, &pts[i], &pts[j], &pts[k]) {
                        return Err(Error::Degenerate(format!("base points {i}, {j}, {k} are collinear")));
                    }
                }
            }
        }
        let (l, e) = (pts[..5].to_vec(), pts[5..].to_vec());
        let h = eleven_points::hyperplane();
        let base = base_conditions(&l, &e, &h);
        let sys = plane_system_basis(plane, h.a as u32, &base)?;
        let system_dim = sys.dim();
        if system_dim as i64 != h.expected_plane_dimension() {
            return Err(Error::UnluckySample(format!("sextic system has dimension {system_dim}")));
        }
        let sextics = ParametrizedSurface::new(sys.basis)?;
        let mut srng = rng::stream(seed, "surface-samples");
        let quadrics = interpolate_ideal(sextics.target_ring(), 2, None, || Ok(sextics.sample(&mut srng)))?;
        info!("surface: {system_dim} sextics, {} quadrics through the image", quadrics.len());
        Ok(ElevenPointSurface { plane, l, e, sextics, system_dim, quadrics })
    }

    pub fn ambient(&self) -> PolyRing {
        self.sextics.target_ring()
    }

    pub fn base_points(&self) -> Vec<Point> {
        self.l.iter().chain(&self.e).cloned().collect()
    }

    /// `h^0(O_X(2H)) = χ(2H)` subtracted from the quadrics of `P^6`.
    pub fn expected_quadrics() -> i64 {
        let h2 = eleven_points::hyperplane().scale(2);
        28 - h2.euler_characteristic(&eleven_points::canonical()).expect("integral class")
    }
}

fn base_conditions(l: &[Point], e: &[Point], class: &DivisorClass) -> Vec<PointWithMultiplicity> {
    l.iter()
        .zip(&class.b)
        .chain(e.iter().zip(&class.c))
        .filter(|(_, &m)| m > 0)
        .map(|(p, &m)| PointWithMultiplicity::new(p.clone(), m as u32))
        .collect()
}

/// A curve on the surface, certified through its ideal.
pub struct CurveOnSurface {
    pub class: DivisorClass,
    pub invariants: ClassInvariants,
    pub plane_model: MultiPoly,
    pub plane_system_dim: usize,
    pub ideal: Ideal,
    pub profile: HilbertProfile,
    /// Degrees interpolated to obtain generators.
    pub interpolated_through: u32,
}

impl CurveOnSurface {
    /// A random member of `|class|`, mapped by the sextics; its ideal is interpolated in
    /// increasing degrees until it is saturated with the Hilbert polynomial of the class.
    pub fn build(surface: &ElevenPointSurface, class: &DivisorClass, seed: u64) -> Result<Self> {
        let field = surface.plane.field;
        let k = eleven_points::canonical();
        let invariants = class_invariants(class, &k, &eleven_points::hyperplane())?;
        let base = base_conditions(&surface.l, &surface.e, class);
        let sys = plane_system_basis(surface.plane, class.a as u32, &base)?;
        let plane_system_dim = sys.dim();
        let mut rng = rng::stream(seed, "curve-member");
        let plane_model = crate::geometry::random_combinations(&mut rng, field, &sys.basis, 1).remove(0);
        let (ideal, profile, interpolated_through) = interpolate_curve(
            &surface.sextics,
            &plane_model,
            &surface.base_points(),
            (invariants.degree, invariants.genus),
            seed,
        )?;
        Ok(CurveOnSurface { class: class.clone(), invariants, plane_model, plane_system_dim, ideal, profile, interpolated_through })
    }
}

/// Image of the plane curve `plane_model = 0` under `map`, cut out by forms of increasing
/// degree until the ideal is saturated with the Hilbert polynomial of a `(d, g)` curve.
///
/// Returns the ideal, its profile and the largest degree interpolated.
pub(crate) fn interpolate_curve(
    map: &ParametrizedSurface,
    plane_model: &MultiPoly,
    exclude: &[Point],
    (degree, genus): (i64, i64),
    seed: u64,
) -> Result<(Ideal, HilbertProfile, u32)> {
    let mut stream = CurvePointStream::new(plane_model, seed, "curve-samples")?.exclude(exclude);
    let mut sampler = || -> Result<Point> {
        loop {
            let p = stream.next_point(10_000).ok_or(Error::NotEnoughPoints { found: 0, wanted: 1 })?;
            if let Some(q) = map.apply(&p) {
                return Ok(q);
            }
        }
    };
    let ring = map.target_ring();
    let mut gens: Vec<MultiPoly> = Vec::new();
    for d in 1..=MAX_INTERPOLATION_DEGREE {
        // forms vanishing at more than d · deg C points of an irreducible curve contain it
        let count = (2 * binomial(ring.nvars as i64 - 1 + d as i64, ring.nvars as i64 - 1) as usize)
            .max(d as usize * degree as usize + 1);
        gens.extend(interpolate_ideal(ring, d, Some(count), &mut sampler)?);
        let ideal = Ideal::new(ring, gens.clone());
        if saturate_irrelevant(&ideal) != ideal {
            continue;
        }
        let Ok(profile) = hilbert_profile(&ideal, None) else { continue };
        if (profile.dim, profile.degree, profile.pa) == (1, degree, genus) {
            info!("curve ({degree}, {genus}) cut out by forms of degree <= {d}");
            return Ok((ideal, profile, d));
        }
    }
    Err(Error::UnluckySample(format!(
        "interpolated forms of degree <= {MAX_INTERPOLATION_DEGREE} do not cut out a ({degree}, {genus}) curve"
    )))
}

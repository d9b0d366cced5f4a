//! Degree-wise ideals of point sets and parametrized images, by evaluation kernels.

use super::points::{normalize_point, random_point};
use super::{is_zero_vector, Point};
use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::poly::{binomial, monomials_of_degree, Monomial, MultiPoly, PolyRing};
use crate::rng::{self, Stream};

/// A rational map `P^{k-1} ⇢ P^{m-1}` given by equal-degree forms.
#[derive(Clone, Debug)]
pub struct ParametrizedSurface {
    components: Vec<MultiPoly>,
    target: PolyRing,
}

impl ParametrizedSurface {
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        let first = components.first().ok_or_else(|| Error::Precondition("no component forms".into()))?;
        let deg = first.degree().ok_or(Error::ZeroPolynomial)?;
        for c in &components {
            c.ring().check(&first.ring())?;
            if !c.is_homogeneous() || c.degree() != Some(deg) {
                return Err(Error::Precondition("components must be forms of one degree".into()));
            }
        }
        let target = PolyRing::new(first.field(), components.len())?;
        Ok(ParametrizedSurface { components, target })
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn source_ring(&self) -> PolyRing {
        self.components[0].ring()
    }

    pub fn target_ring(&self) -> PolyRing {
        self.target
    }

    /// Image of a parameter point; `None` at base points.
    pub fn apply(&self, point: &[u32]) -> Option<Point> {
        let v: Vec<u32> = self.components.iter().map(|c| c.evaluate(point)).collect();
        (!is_zero_vector(&v)).then(|| normalize_point(self.target.field, &v))
    }

    /// Image of a random parameter point.
    pub fn sample(&self, rng: &mut Stream) -> Point {
        let src = self.source_ring();
        loop {
            let t = random_point(rng, src.field, src.nvars);
            if let Some(p) = self.apply(&t) {
                return p;
            }
        }
    }

    /// Forms of degree `d` vanishing on the image.
    pub fn interpolate(&self, d: u32, seed: u64) -> Result<Vec<MultiPoly>> {
        let mut rng = rng::stream(seed, "surface-samples");
        interpolate_ideal(self.target, d, None, || Ok(self.sample(&mut rng)))
    }
}

/// Values of all degree-`d` monomials at `p`.
fn monomial_values(ring: PolyRing, monos: &[Monomial], p: &[u32]) -> Vec<u32> {
    let field = ring.field;
    let top = monos.first().map_or(0, |m| m.degree()) as usize;
    let powers: Vec<Vec<u32>> = p
        .iter()
        .map(|&x| {
            let mut pw = vec![1u32; top + 1];
            for e in 1..=top {
                pw[e] = field.mul(pw[e - 1], x % field.modulus());
            }
            pw
        })
        .collect();
    monos
        .iter()
        .map(|m| (0..ring.nvars).fold(1u32, |acc, i| field.mul(acc, powers[i][m.exponent(i) as usize])))
        .collect()
}

/// Basis of the forms of degree `d` vanishing at every given point.
pub fn interpolate_forms(ring: PolyRing, d: u32, points: &[Point]) -> Vec<MultiPoly> {
    let monos = monomials_of_degree(ring.nvars, d);
    if points.is_empty() {
        return monos.iter().map(|&m| MultiPoly::monomial(ring, m, 1)).collect();
    }
    let rows: Vec<Vec<u32>> = points.iter().map(|p| monomial_values(ring, &monos, p)).collect();
    Matrix::from_rows(ring.field, monos.len(), rows)
        .kernel_basis()
        .into_iter()
        .map(|v| MultiPoly::from_terms(ring, monos.iter().copied().zip(v).collect()))
        .collect()
}

/// Degree-`d` part of the ideal of the set the sampler draws from.
///
/// Uses `count` samples (at least twice the number of degree-`d` monomials), then checks the
/// result on a fresh batch of the same size.
pub fn interpolate_ideal(
    ring: PolyRing,
    d: u32,
    count: Option<usize>,
    mut sampler: impl FnMut() -> Result<Point>,
) -> Result<Vec<MultiPoly>> {
    let monos = binomial(ring.nvars as i64 - 1 + d as i64, ring.nvars as i64 - 1) as usize;
    let n = count.unwrap_or(0).max(2 * monos);
    let batch = (0..n).map(|_| sampler()).collect::<Result<Vec<_>>>()?;
    let forms = interpolate_forms(ring, d, &batch);
    for _ in 0..n {
        let p = sampler()?;
        if let Some(f) = forms.iter().find(|f| f.evaluate(&p) != 0) {
            return Err(Error::UnluckySample(format!(
                "degree-{d} form {f} does not vanish at fresh sample {p:?}"
            )));
        }
    }
    Ok(forms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::groebner::Ideal;
    use crate::poly::parse_poly;

    fn twisted_cubic_map() -> ParametrizedSurface {
        let r = PolyRing::new(PrimeField::new(10007).unwrap(), 2).unwrap();
        ParametrizedSurface::new(["x0^3", "x0^2*x1", "x0*x1^2", "x1^3"].iter().map(|s| parse_poly(r, s).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn twisted_cubic_quadrics_are_the_minors() {
        let s = twisted_cubic_map();
        let q = s.interpolate(2, 4).unwrap();
        assert_eq!(q.len(), 3);
        let t = s.target_ring();
        let minors = Ideal::new(
            t,
            ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"].iter().map(|s| parse_poly(t, s).unwrap()).collect(),
        );
        assert_eq!(Ideal::new(t, q), minors);
        assert!(s.interpolate(1, 4).unwrap().is_empty());
    }

    #[test]
    fn unlucky_batches_are_reported() {
        let s = twisted_cubic_map();
        let t = s.target_ring();
        let mut rng = rng::stream(1, "t");
        // samples drawn from a single point make every form through it look valid
        let fixed = s.sample(&mut rng);
        let mut k = 0;
        let res = interpolate_ideal(t, 2, None, || {
            k += 1;
            Ok(if k <= 20 { fixed.clone() } else { s.sample(&mut rng) })
        });
        assert!(matches!(res, Err(Error::UnluckySample(_))));
    }

    #[test]
    fn rejects_mixed_degrees() {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), 2).unwrap();
        assert!(ParametrizedSurface::new(vec![parse_poly(r, "x0").unwrap(), parse_poly(r, "x1^2").unwrap()]).is_err());
    }
}

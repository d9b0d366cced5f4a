//! Linear projection from a point.

use super::points::normalize_point;
use super::{is_zero_vector, Point};
use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::groebner::{elimination_ideal, saturate_irrelevant, Ideal};
use crate::poly::MultiPoly;

/// Image ideal of a projection together with the linear forms defining the map.
#[derive(Clone, Debug)]
pub struct Projection {
    pub image: Ideal,
    /// Row `k` holds the coefficients of the `k`-th coordinate of the map.
    pub forms: Vec<Vec<u32>>,
}

impl Projection {
    pub fn apply(&self, p: &[u32]) -> Option<Point> {
        let field = self.image.ring().field;
        let v: Vec<u32> = self
            .forms
            .iter()
            .map(|row| row.iter().zip(p).fold(0u32, |acc, (&a, &x)| field.mul_add(acc, a, x)))
            .collect();
        (!is_zero_vector(&v)).then(|| normalize_point(field, &v))
    }
}

/// Ideal of the closure of the image of `V(I)` under projection from `center`.
///
/// Coordinates `y = B x` are chosen with `B · center = (0, …, 0, 1)`; the first `n - 1` rows
/// of `B` are the projection. The ideal in `y` is eliminated against `y_{n-1}` and saturated.
pub fn project_from_point(ideal: &Ideal, center: &[u32]) -> Result<Projection> {
    let ring = ideal.ring();
    let field = ring.field;
    let n = ring.nvars;
    if center.len() != n || is_zero_vector(center) {
        return Err(Error::Degenerate(format!("{center:?} is not a point of P^{}", n - 1)));
    }
    if n < 2 {
        return Err(Error::Precondition("projection needs at least two variables".into()));
    }
    let c = normalize_point(field, center);
    let mut rows = Matrix::from_rows(field, n, vec![c.clone()]).kernel_basis();
    let k = c.iter().position(|&v| v != 0).unwrap();
    let mut last = vec![0u32; n];
    last[k] = field.inv_nz(c[k]);
    rows.push(last);
    let b = Matrix::from_rows(field, n, rows.clone());
    let b_inv = b.inverse()?;
    // x = B^{-1} y
    let images: Vec<MultiPoly> = (0..n).map(|i| ring.linear_form(b_inv.row(i))).collect();
    let moved = Ideal::new(ring, ideal.gb().elements().iter().map(|g| g.substitute(&images)).collect());
    let image = elimination_ideal(&moved, n - 1)?;
    rows.pop();
    Ok(Projection { image: saturate_irrelevant(&image), forms: rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::hilbert::hilbert_profile;
    use crate::poly::{parse_poly, PolyRing};

    fn ring(n: usize) -> PolyRing {
        PolyRing::new(PrimeField::new(10007).unwrap(), n).unwrap()
    }

    fn rational_normal_curve(d: usize) -> Ideal {
        let r = ring(d + 1);
        let mut gens = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                gens.push(parse_poly(r, &format!("x{i}*x{} - x{}*x{j}", j + 1, i + 1)).unwrap());
            }
        }
        Ideal::new(r, gens)
    }

    #[test]
    fn projecting_rational_normal_curves_from_a_point_on_them() {
        for d in 3..=5usize {
            let rnc = rational_normal_curve(d);
            // the point (1 : t : ... : t^d) with t = 3
            let p: Vec<u32> = (0..=d as u32).map(|k| 3u32.pow(k)).collect();
            let before = hilbert_profile(&rnc, None).unwrap();
            let proj = project_from_point(&rnc, &p).unwrap();
            let after = hilbert_profile(&proj.image, None).unwrap();
            assert_eq!((before.degree, after.degree), (d as i64, d as i64 - 1), "d={d}");
            assert_eq!(after.pa, 0);
            // an image point satisfies the image ideal
            let q: Vec<u32> = (0..=d as u32).map(|k| 5u32.pow(k)).collect();
            let img = proj.apply(&q).unwrap();
            assert!(proj.image.gens().iter().all(|g| g.evaluate(&img) == 0));
        }
    }

    #[test]
    fn conic_from_an_external_point_is_dominant() {
        let r = ring(3);
        let conic = Ideal::new(r, vec![parse_poly(r, "x0*x1 - x2^2").unwrap()]);
        let proj = project_from_point(&conic, &[1, 1, 0]).unwrap();
        assert!(proj.image.is_zero());
    }
}

//! Rational points of zero-dimensional schemes.

use rustc_hash::FxHashSet;

use super::{vanishes_at, Point};
use crate::algebra::{uni_roots, Matrix, PrimeField, UniPoly};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::HilbertSeries;
use crate::poly::MultiPoly;
use crate::rng::{self, Stream};

const ATTEMPTS: usize = 5;

/// Scales so that the first nonzero coordinate is 1.
pub fn normalize_point(field: PrimeField, p: &[u32]) -> Point {
    let p: Vec<u32> = p.iter().map(|&x| x % field.modulus()).collect();
    match p.iter().find(|&&x| x != 0) {
        None => p,
        Some(&lead) => {
            let inv = field.inv_nz(lead);
            p.iter().map(|&x| field.mul(x, inv)).collect()
        }
    }
}

/// A uniformly random nonzero vector, normalized.
pub fn random_point(rng: &mut Stream, field: PrimeField, n: usize) -> Point {
    loop {
        let v = rng::residues(rng, field, n);
        if v.iter().any(|&x| x != 0) {
            return normalize_point(field, &v);
        }
    }
}

/// All `F_p`-rational points of a saturated zero-dimensional scheme.
///
/// Works in `(R/I)_d` once the Hilbert function has reached the degree `N` of the scheme.
/// For a linear form `ℓ` vanishing at no point, multiplication by `x_i / ℓ` acts on
/// `(R/I)_d` with the evaluation functionals at the points as common eigenvectors.
/// The rational eigenvalues of a random combination are separated, and each gives the
/// coordinates `x_i(P)/ℓ(P)` of a point; every point is checked against the generators.
pub fn rational_points_dim0(ideal: &Ideal) -> Result<Vec<Point>> {
    let ring = ideal.ring();
    let field = ring.field;
    let n = ring.nvars;
    let hs = HilbertSeries::of(ideal);
    match hs.projective_dim() {
        -1 => return Ok(vec![]),
        0 => {}
        k => return Err(Error::NotZeroDimensional(k)),
    }
    let len = hs.degree();
    let d = (0..200i64)
        .find(|&d| hs.value(d) == len)
        .ok_or_else(|| Error::Precondition("Hilbert function never reaches the degree; is the ideal saturated?".into()))?
        as u32;
    let src = ideal.nf_table(d);
    let dst = ideal.nf_table(d + 1);
    let len = len as usize;
    let mult = |form: &MultiPoly| -> Matrix {
        let mut m = Matrix::zeros(field, len, len);
        for (r, &u) in src.standard().iter().enumerate() {
            let mut acc = vec![0u32; len];
            for &(mono, c) in form.terms() {
                dst.add_nf_of_monomial(&mut acc, mono.mul(u), c, field.modulus());
            }
            for (k, v) in acc.into_iter().enumerate() {
                m.set(r, k, v);
            }
        }
        m
    };
    let xs: Vec<Matrix> = (0..n).map(|i| mult(&ring.var(i))).collect();
    let mut rng = rng::stream(0x9017, "rational-points");
    let mut last_err = String::new();
    for _ in 0..ATTEMPTS {
        let ell = ring.linear_form(&rng::residues(&mut rng, field, n));
        let Ok(l_inv) = mult(&ell).inverse() else {
            last_err = "linear form vanishes at a point".into();
            continue;
        };
        let ms: Vec<Matrix> = xs.iter().map(|x| x.mul(&l_inv)).collect();
        match points_from_operators(ideal, &ms, &mut rng) {
            Ok(pts) => return Ok(pts),
            Err(e) => last_err = e.to_string(),
        }
    }
    Err(Error::RetriesExhausted { attempts: ATTEMPTS as u32, last: last_err })
}

fn points_from_operators(ideal: &Ideal, ms: &[Matrix], rng: &mut Stream) -> Result<Vec<Point>> {
    let field = ideal.ring().field;
    let len = ms[0].rows();
    let coeffs = rng::residues(rng, field, ms.len());
    let mut m = Matrix::zeros(field, len, len);
    for (mi, &c) in ms.iter().zip(&coeffs) {
        for i in 0..len {
            for j in 0..len {
                m.set(i, j, field.mul_add(m.get(i, j), c, mi.get(i, j)));
            }
        }
    }
    let mu = minimal_polynomial(&m, rng);
    let mut out = Vec::new();
    let mut seen = FxHashSet::default();
    for lambda in uni_roots(&mu)? {
        let shifted = Matrix::from_fn(field, len, len, |i, j| {
            let v = m.get(i, j);
            if i == j {
                field.sub(v, lambda)
            } else {
                v
            }
        });
        let w = shifted.kernel_basis();
        let k = w.len();
        let wm = Matrix::from_fn(field, len, k, |i, j| w[j][i]);
        let mut coords = Vec::with_capacity(ms.len());
        for mi in ms {
            // trace of M_i on the eigenspace, divided by its dimension
            let mut tr = 0u32;
            for (j, wj) in w.iter().enumerate() {
                let img = mi.mul_vec(wj);
                let c = wm.solve(&img).ok_or_else(|| Error::Verification {
                    claim: "eigenspace is invariant under the multiplication operators".into(),
                })?;
                tr = field.add(tr, c[j]);
            }
            coords.push(field.div(tr, (k as u32) % field.modulus()).map_err(|_| Error::Degenerate("eigenspace dimension divisible by p".into()))?);
        }
        let pt = normalize_point(field, &coords);
        if !vanishes_at(ideal.gb().elements(), &pt) {
            return Err(Error::Verification { claim: format!("eigenvalue {lambda} gives a point of the scheme") });
        }
        if seen.insert(pt.clone()) {
            out.push(pt);
        }
    }
    out.sort();
    Ok(out)
}

/// Minimal polynomial of `m`, as the lcm of the Krylov minimal polynomials of two random vectors.
fn minimal_polynomial(m: &Matrix, rng: &mut Stream) -> UniPoly {
    let field = m.field();
    let mut acc = UniPoly::constant(field, 1);
    for _ in 0..2 {
        let v = rng::residues(rng, field, m.rows());
        let mv = krylov_polynomial(m, v);
        let g = acc.gcd(&mv);
        acc = acc.mul(&mv).divrem(&g).0.monic();
    }
    acc
}

fn krylov_polynomial(m: &Matrix, v: Vec<u32>) -> UniPoly {
    let field = m.field();
    let mut seq = vec![v];
    loop {
        let next = m.mul_vec(seq.last().unwrap());
        let basis = Matrix::from_fn(field, m.rows(), seq.len(), |i, j| seq[j][i]);
        if let Some(c) = basis.solve(&next) {
            // next = Σ c_j M^j v  ⇒  t^k - Σ c_j t^j
            let mut coeffs: Vec<u32> = c.iter().map(|&x| field.neg(x)).collect();
            coeffs.push(1);
            return UniPoly::new(field, coeffs);
        }
        seq.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, PolyRing};

    fn ring(n: usize) -> PolyRing {
        PolyRing::new(PrimeField::new(10007).unwrap(), n).unwrap()
    }

    #[test]
    fn two_points_on_the_line() {
        let r = ring(2);
        let i = Ideal::new(r, vec![parse_poly(r, "x0*x1").unwrap()]);
        assert_eq!(rational_points_dim0(&i).unwrap(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn conic_slice_matches_discriminant() {
        let r = ring(3);
        let f = r.field;
        for (b, c) in [(3u32, 2u32), (1, 1), (0, 5), (7, 9)] {
            // x0^2 + b x0 x2 + c x2^2 on the line x1 = 0 has roots by the quadratic formula
            let conic = parse_poly(r, &format!("x0^2 + {b}*x0*x2 + {c}*x2^2 + x1*x2")).unwrap();
            let i = Ideal::new(r, vec![conic.clone(), r.var(1)]);
            let pts = rational_points_dim0(&crate::groebner::saturate_irrelevant(&i)).unwrap();
            let disc = f.sub(f.mul(b, b), f.mul(4, c));
            let residue = disc == 0 || f.pow(disc, (10007 - 1) / 2) == 1;
            let expected = if disc == 0 { 1 } else if residue { 2 } else { 0 };
            assert_eq!(pts.len(), expected, "b={b} c={c}");
            assert!(pts.iter().all(|p| conic.evaluate(p) == 0 && p[1] == 0));
        }
    }

    #[test]
    fn reduced_points_in_p3() {
        let r = ring(4);
        let pts: Vec<Point> = vec![vec![1, 2, 3, 4], vec![1, 0, 0, 5], vec![0, 1, 7, 7], vec![1, 1, 1, 1], vec![0, 0, 1, 9]];
        // intersect the point ideals through the kernel of the evaluation map in degree 2 and 3
        let mut gens = Vec::new();
        for d in 2..=3 {
            gens.extend(super::super::interpolate_forms(r, d, &pts));
        }
        let i = crate::groebner::saturate_irrelevant(&Ideal::new(r, gens));
        let mut expected: Vec<Point> = pts.iter().map(|p| normalize_point(r.field, p)).collect();
        expected.sort();
        assert_eq!(rational_points_dim0(&i).unwrap(), expected);
    }

    #[test]
    fn rejects_curves() {
        let r = ring(3);
        let i = Ideal::new(r, vec![parse_poly(r, "x0*x1 - x2^2").unwrap()]);
        assert_eq!(rational_points_dim0(&i), Err(Error::NotZeroDimensional(1)));
    }
}

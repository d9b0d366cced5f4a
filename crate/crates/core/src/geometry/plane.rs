//! Plane linear systems with assigned base points, and point sampling on plane curves.

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::points::normalize_point;
use super::{is_zero_vector, Point};
use crate::algebra::{uni_roots, Matrix, UniPoly};
use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial, MultiPoly, PolyRing};
use crate::rng::{self, Stream};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointWithMultiplicity {
    pub point: Point,
    pub mult: u32,
}

impl PointWithMultiplicity {
    pub fn new(point: Point, mult: u32) -> Self {
        PointWithMultiplicity { point, mult }
    }
}

/// Ternary forms of degree `degree` with the prescribed multiplicities at the base points.
#[derive(Clone, Debug)]
pub struct PlaneLinearSystem {
    pub degree: u32,
    pub base: Vec<PointWithMultiplicity>,
    pub basis: Vec<MultiPoly>,
}

impl PlaneLinearSystem {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Exponent vectors of total degree `k` in three variables.
fn orders(k: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=k).rev() {
        for b in (0..=k - a).rev() {
            out.push([a, b, k - a - b]);
        }
    }
    out
}

fn falling(n: u32, k: u32) -> u64 {
    (0..k).map(|i| (n - i) as u64).product()
}

/// `∂^β (x^α)` evaluated at `p`.
fn derivative_at(ring: PolyRing, alpha: Monomial, beta: &[u32; 3], powers: &[Vec<u32>; 3]) -> u32 {
    let f = ring.field;
    let mut v = 1u32;
    for i in 0..3 {
        let a = alpha.exponent(i);
        if a < beta[i] {
            return 0;
        }
        let coef = (falling(a, beta[i]) % f.modulus() as u64) as u32;
        v = f.mul(v, f.mul(coef, powers[i][(a - beta[i]) as usize]));
    }
    v
}

/// Basis of ternary forms of degree `a` with multiplicity at least `mult` at each base point,
/// i.e. all partial derivatives of order `< mult` vanish there.
pub fn plane_system_basis(ring: PolyRing, a: u32, base: &[PointWithMultiplicity]) -> Result<PlaneLinearSystem> {
    if ring.nvars != 3 {
        return Err(Error::RingMismatch(format!("plane systems need 3 variables, got {}", ring.nvars)));
    }
    let field = ring.field;
    let mut seen = FxHashSet::default();
    for b in base {
        if b.point.len() != 3 || is_zero_vector(&b.point) {
            return Err(Error::Degenerate(format!("{:?} is not a point of the plane", b.point)));
        }
        if !seen.insert(normalize_point(field, &b.point)) {
            return Err(Error::Degenerate(format!("base point {:?} repeated", b.point)));
        }
    }
    let monos = monomials_of_degree(3, a);
    let mut rows = Vec::new();
    for b in base {
        let powers: [Vec<u32>; 3] = std::array::from_fn(|i| {
            let mut pw = vec![1u32; a as usize + 1];
            for e in 1..=a as usize {
                pw[e] = field.mul(pw[e - 1], b.point[i] % field.modulus());
            }
            pw
        });
        for k in 0..b.mult.min(a + 1) {
            for beta in orders(k) {
                rows.push(monos.iter().map(|&m| derivative_at(ring, m, &beta, &powers)).collect::<Vec<u32>>());
            }
        }
    }
    let basis: Vec<MultiPoly> = if rows.is_empty() {
        monos.iter().map(|&m| MultiPoly::monomial(ring, m, 1)).collect()
    } else {
        Matrix::from_rows(field, monos.len(), rows)
            .kernel_basis()
            .into_iter()
            .map(|v| MultiPoly::from_terms(ring, monos.iter().copied().zip(v).collect()))
            .collect()
    };
    if basis.is_empty() {
        let conds: i64 = base.iter().map(|b| (b.mult * (b.mult + 1) / 2) as i64).sum();
        let forms = ((a + 1) * (a + 2) / 2) as i64;
        return Err(Error::EmptySystem { expected: forms - conds, actual: 0 });
    }
    for f in &basis {
        verify_multiplicities(f, base)?;
    }
    Ok(PlaneLinearSystem { degree: a, base: base.to_vec(), basis })
}

/// Recomputes every derivative of order `< mult` symbolically and evaluates it.
fn verify_multiplicities(f: &MultiPoly, base: &[PointWithMultiplicity]) -> Result<()> {
    let top = base.iter().map(|b| b.mult).max().unwrap_or(0);
    let mut level = vec![f.clone()];
    for k in 0..top {
        for b in base.iter().filter(|b| b.mult > k) {
            if level.iter().any(|g| g.evaluate(&b.point) != 0) {
                return Err(Error::Verification {
                    claim: format!("order-{k} derivatives vanish at base point {:?}", b.point),
                });
            }
        }
        if k + 1 < top {
            let mut next: Vec<MultiPoly> = Vec::new();
            for g in &level {
                for i in 0..3 {
                    let d = g.partial_derivative(i)?;
                    if !d.is_zero() && !next.contains(&d) {
                        next.push(d);
                    }
                }
            }
            level = next;
        }
    }
    Ok(())
}

/// Endless supply of distinct `F_p` points on a plane curve, found by intersecting it with
/// random lines and extracting the roots of the restriction.
pub struct CurvePointStream {
    f: MultiPoly,
    line_ring: PolyRing,
    rng: Stream,
    seen: FxHashSet<Point>,
    exclude: FxHashSet<Point>,
    buffer: Vec<Point>,
    lines_tried: usize,
}

impl CurvePointStream {
    pub fn new(f: &MultiPoly, seed: u64, label: &str) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.ring().nvars != 3 {
            return Err(Error::RingMismatch("plane curves need 3 variables".into()));
        }
        Ok(CurvePointStream {
            f: f.clone(),
            line_ring: PolyRing::new(f.field(), 1)?,
            rng: rng::stream(seed, label),
            seen: FxHashSet::default(),
            exclude: FxHashSet::default(),
            buffer: Vec::new(),
            lines_tried: 0,
        })
    }

    /// Points never to be returned (e.g. base points of a linear system).
    pub fn exclude(mut self, points: &[Point]) -> Self {
        let field = self.f.field();
        self.exclude.extend(points.iter().map(|p| normalize_point(field, p)));
        self
    }

    pub fn lines_tried(&self) -> usize {
        self.lines_tried
    }

    fn scan_line(&mut self) {
        let field = self.f.field();
        self.lines_tried += 1;
        let p = rng::residues(&mut self.rng, field, 3);
        let q = rng::residues(&mut self.rng, field, 3);
        if is_zero_vector(&q) {
            return;
        }
        // the line {p + t q} ∪ {q}
        let t = self.line_ring.var(0);
        let images: Vec<MultiPoly> = (0..3)
            .map(|i| MultiPoly::constant(self.line_ring, p[i]).add_scaled(&t, q[i]))
            .collect();
        let g = self.f.substitute(&images);
        let mut coeffs = vec![0u32; g.degree().map_or(0, |d| d as usize + 1)];
        for &(m, c) in g.terms() {
            coeffs[m.exponent(0) as usize] = c;
        }
        let uni = UniPoly::new(field, coeffs);
        let mut found: Vec<Point> = Vec::new();
        if self.f.evaluate(&q) == 0 {
            found.push(q.clone());
        }
        if !uni.is_zero() {
            for r in uni_roots(&uni).unwrap_or_default() {
                found.push((0..3).map(|i| field.add(p[i], field.mul(r, q[i]))).collect());
            }
        }
        for pt in found {
            if is_zero_vector(&pt) {
                continue;
            }
            let n = normalize_point(field, &pt);
            if !self.exclude.contains(&n) && self.seen.insert(n.clone()) {
                self.buffer.push(n);
            }
        }
    }

    /// Next unseen point, giving up after `max_lines` further lines without success.
    pub fn next_point(&mut self, max_lines: usize) -> Option<Point> {
        let mut tries = 0;
        while self.buffer.is_empty() {
            if tries == max_lines {
                return None;
            }
            self.scan_line();
            tries += 1;
        }
        Some(self.buffer.remove(0))
    }
}

/// `count` distinct `F_p` points of the curve `f = 0`.
pub fn plane_curve_points(f: &MultiPoly, count: usize, seed: u64) -> Result<Vec<Point>> {
    let mut stream = CurvePointStream::new(f, seed, "plane-curve-points")?;
    let patience = 200 + 4 * f.field().modulus() as usize;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        match stream.next_point(patience) {
            Some(p) => out.push(p),
            None => return Err(Error::NotEnoughPoints { found: out.len(), wanted: count }),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::poly::parse_poly;

    fn ring(p: u64) -> PolyRing {
        PolyRing::new(PrimeField::new(p).unwrap(), 3).unwrap()
    }

    fn random_points(r: PolyRing, k: usize, seed: u64) -> Vec<Point> {
        let mut s = rng::stream(seed, "test-points");
        (0..k).map(|_| rng::residues(&mut s, r.field, 3)).collect()
    }

    #[test]
    fn pencil_of_conics() {
        let r = ring(10007);
        let base: Vec<_> = random_points(r, 4, 1).into_iter().map(|p| PointWithMultiplicity::new(p, 1)).collect();
        let sys = plane_system_basis(r, 2, &base).unwrap();
        assert_eq!(sys.dim(), 2);
    }

    #[test]
    fn sextics_with_double_points() {
        let r = ring(10007);
        let pts = random_points(r, 11, 2);
        let base: Vec<_> = pts
            .into_iter()
            .enumerate()
            .map(|(i, p)| PointWithMultiplicity::new(p, if i < 5 { 2 } else { 1 }))
            .collect();
        let sys = plane_system_basis(r, 6, &base).unwrap();
        assert_eq!(sys.dim(), 28 - 15 - 6);
        // an independent check: each form is singular at the double points
        for f in &sys.basis {
            for b in base.iter().take(5) {
                assert!(f.gradient().iter().all(|g| g.evaluate(&b.point) == 0));
            }
        }
    }

    #[test]
    fn empty_and_degenerate() {
        let r = ring(10007);
        let base: Vec<_> = random_points(r, 7, 3).into_iter().map(|p| PointWithMultiplicity::new(p, 1)).collect();
        assert!(matches!(plane_system_basis(r, 2, &base), Err(Error::EmptySystem { expected: -1, actual: 0 })));
        let dup = vec![
            PointWithMultiplicity::new(vec![1, 2, 3], 1),
            PointWithMultiplicity::new(vec![2, 4, 6], 1),
        ];
        assert!(matches!(plane_system_basis(r, 2, &dup), Err(Error::Degenerate(_))));
    }

    #[test]
    fn points_on_a_conic_over_f7() {
        let r = ring(7);
        let f = parse_poly(r, "x0*x1 - x2^2").unwrap();
        let pts = plane_curve_points(&f, 8, 5).unwrap();
        assert_eq!(pts.len(), 8);
        assert!(pts.iter().all(|p| f.evaluate(p) == 0));
        assert!(matches!(plane_curve_points(&f, 9, 5), Err(Error::NotEnoughPoints { found: 8, wanted: 9 })));
    }

    #[test]
    fn points_on_a_line_and_a_quartic() {
        let r = ring(10007);
        let f = parse_poly(r, "x0").unwrap();
        let pts = plane_curve_points(&f, 5, 1).unwrap();
        assert!(pts.iter().all(|p| p[0] == 0));
        let quartic = parse_poly(r, "x0^4 + x1^4 + x2^4 + 3*x0*x1*x2^2 + 5*x0^2*x1*x2").unwrap();
        let pts = plane_curve_points(&quartic, 500, 2).unwrap();
        let distinct: FxHashSet<_> = pts.iter().cloned().collect();
        assert_eq!(distinct.len(), 500);
        assert!(pts.iter().all(|p| quartic.evaluate(p) == 0));
    }
}

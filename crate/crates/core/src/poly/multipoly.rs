use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::monomial::{Monomial, MAX_VARS};
use crate::algebra::{FieldElement, PrimeField};
use crate::error::{Error, Result};

/// The graded ring k[x_0..x_{n-1}] over a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub field: PrimeField,
    pub nvars: usize,
}

impl PolyRing {
    pub fn new(field: PrimeField, nvars: usize) -> Result<Self> {
        if nvars == 0 || nvars > MAX_VARS {
            return Err(Error::VariableOutOfRange { index: nvars, nvars: MAX_VARS });
        }
        Ok(PolyRing { field, nvars })
    }

    pub fn var(&self, i: usize) -> MultiPoly {
        assert!(i < self.nvars, "variable x{i} outside ring of {} variables", self.nvars);
        MultiPoly::from_sorted(*self, vec![(Monomial::var(i), 1)])
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly::zero(*self)
    }

    pub fn one(&self) -> MultiPoly {
        MultiPoly::constant(*self, 1)
    }

    pub fn check(&self, other: &PolyRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{} variables over {:?} vs {} variables over {:?}",
                self.nvars, self.field, other.nvars, other.field
            )))
        }
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear_form(&self, coeffs: &[u32]) -> MultiPoly {
        assert_eq!(coeffs.len(), self.nvars);
        MultiPoly::from_terms(
            *self,
            coeffs.iter().enumerate().map(|(i, &c)| (Monomial::var(i), c)).collect(),
        )
    }
}

/// Sparse polynomial with terms sorted in descending degrevlex order and no zero coefficients.
///
/// That canonical layout makes `==` ideal-free structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: Vec<(Monomial, u32)>,
}

impl MultiPoly {
    pub fn zero(ring: PolyRing) -> Self {
        MultiPoly { ring, terms: vec![] }
    }

    pub fn constant(ring: PolyRing, c: u32) -> Self {
        Self::from_terms(ring, vec![(Monomial::ONE, c)])
    }

    pub fn monomial(ring: PolyRing, m: Monomial, c: u32) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and drops zeros.
    pub fn from_terms(ring: PolyRing, mut terms: Vec<(Monomial, u32)>) -> Self {
        let f = ring.field;
        terms.sort_unstable_by(|a, b| b.0.cmp_degrevlex(a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert!(m.support_len() <= ring.nvars);
            let c = c % f.modulus();
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = f.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        MultiPoly { ring, terms: out }
    }

    /// Trusts that `terms` are already canonical.
    pub(crate) fn from_sorted(ring: PolyRing, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.cmp_degrevlex(w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        MultiPoly { ring, terms }
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term in degrevlex.
    pub fn lead(&self) -> Option<(Monomial, u32)> {
        self.terms.first().copied()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    pub fn coefficient(&self, m: Monomial) -> u32 {
        self.terms
            .binary_search_by(|t| m.cmp_degrevlex(t.0))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.ring.check(&other.ring)?;
        Ok(self.add_scaled(other, 1))
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.ring.check(&other.ring)?;
        Ok(self.add_scaled(other, self.field().neg(1)))
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.ring.check(&other.ring)?;
        Ok(self.mul_poly(other))
    }

    /// `self + c * other` by a linear merge.
    pub fn add_scaled(&self, other: &MultiPoly, c: u32) -> MultiPoly {
        let f = self.field();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp_degrevlex(b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let v = f.mul(b[j].1, c);
                    if v != 0 {
                        out.push((b[j].0, v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.mul_add(a[i].1, b[j].1, c);
                    if v != 0 {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for &(m, v) in &b[j..] {
            let v = f.mul(v, c);
            if v != 0 {
                out.push((m, v));
            }
        }
        MultiPoly::from_sorted(self.ring, out)
    }

    pub fn scale(&self, c: u32) -> MultiPoly {
        let f = self.field();
        let c = c % f.modulus();
        if c == 0 {
            return MultiPoly::zero(self.ring);
        }
        MultiPoly::from_sorted(self.ring, self.terms.iter().map(|&(m, v)| (m, f.mul(v, c))).collect())
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> MultiPoly {
        match self.lead() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field().inv_nz(c)),
        }
    }

    pub fn mul_term(&self, m: Monomial, c: u32) -> MultiPoly {
        let f = self.field();
        if c.is_multiple_of(f.modulus()) {
            return MultiPoly::zero(self.ring);
        }
        // multiplying by a monomial preserves the order
        MultiPoly::from_sorted(self.ring, self.terms.iter().map(|&(t, v)| (t.mul(m), f.mul(v, c))).collect())
    }

    fn mul_poly(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(self.ring);
        }
        let f = self.field();
        let mut acc: FxHashMap<Monomial, u32> = FxHashMap::default();
        for &(a, ca) in &self.terms {
            for &(b, cb) in &other.terms {
                let e = acc.entry(a.mul(b)).or_insert(0);
                *e = f.mul_add(*e, ca, cb);
            }
        }
        MultiPoly::from_terms(self.ring, acc.into_iter().collect())
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::constant(self.ring, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    pub fn evaluate(&self, point: &[u32]) -> u32 {
        assert_eq!(point.len(), self.ring.nvars, "point has the wrong number of coordinates");
        let f = self.field();
        let n = self.ring.nvars;
        // power tables per variable up to the needed exponent
        let maxe: Vec<u32> = (0..n)
            .map(|i| self.terms.iter().map(|t| t.0.exponent(i)).max().unwrap_or(0))
            .collect();
        let pows: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut v = Vec::with_capacity(maxe[i] as usize + 1);
                let mut x = 1u32;
                for _ in 0..=maxe[i] {
                    v.push(x);
                    x = f.mul(x, point[i] % f.modulus());
                }
                v
            })
            .collect();
        self.terms.iter().fold(0u32, |acc, &(m, c)| {
            let mut v = c;
            for (i, pw) in pows.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v = f.mul(v, pw[e as usize]);
                }
            }
            f.add(acc, v)
        })
    }

    pub fn evaluate_at(&self, point: &[FieldElement]) -> FieldElement {
        let raw: Vec<u32> = point.iter().map(|x| x.value()).collect();
        self.field().elem(self.evaluate(&raw) as u64)
    }

    pub fn partial_derivative(&self, i: usize) -> Result<MultiPoly> {
        if i >= self.ring.nvars {
            return Err(Error::VariableOutOfRange { index: i, nvars: self.ring.nvars });
        }
        let f = self.field();
        let x = Monomial::var(i);
        let terms = self
            .terms
            .iter()
            .filter_map(|&(m, c)| {
                let e = m.exponent(i);
                (e > 0).then(|| (x.divide_into(m).unwrap(), f.mul(c, f.reduce(e as u64))))
            })
            .collect();
        Ok(MultiPoly::from_terms(self.ring, terms))
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        (0..self.ring.nvars).map(|i| self.partial_derivative(i).unwrap()).collect()
    }

    /// Substitutes `images[i]` for `x_i`; the images may live in a different ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.ring.nvars);
        let target = images[0].ring;
        let n = self.ring.nvars;
        let mut cache: Vec<Vec<MultiPoly>> = images.iter().map(|g| vec![MultiPoly::constant(target, 1), g.clone()]).collect();
        let mut acc: FxHashMap<Monomial, u32> = FxHashMap::default();
        let f = target.field;
        for &(m, c) in &self.terms {
            let mut prod = MultiPoly::constant(target, c);
            for i in 0..n {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap().mul_poly(&images[i]);
                    cache[i].push(next);
                }
                prod = prod.mul_poly(&cache[i][e]);
            }
            for (t, v) in prod.terms {
                let e = acc.entry(t).or_insert(0);
                *e = f.add(*e, v);
            }
        }
        MultiPoly::from_terms(target, acc.into_iter().collect())
    }

    /// Applies the linear change `x_i -> sum_j a[i][j] x_j`.
    pub fn linear_change(&self, a: &[Vec<u32>]) -> MultiPoly {
        let images: Vec<MultiPoly> = a.iter().map(|row| self.ring.linear_form(row)).collect();
        self.substitute(&images)
    }

    /// Same polynomial viewed in a ring with more variables (or the same).
    pub fn embed(&self, ring: PolyRing) -> MultiPoly {
        assert!(ring.nvars >= self.ring.nvars && ring.field == self.ring.field);
        MultiPoly { ring, terms: self.terms.clone() }
    }

    /// Reinterprets in a ring with fewer variables; fails if a dropped variable occurs.
    pub fn restrict(&self, ring: PolyRing) -> Result<MultiPoly> {
        if self.terms.iter().any(|t| t.0.support_len() > ring.nvars) {
            return Err(Error::RingMismatch(format!("polynomial uses variables beyond x{}", ring.nvars - 1)));
        }
        Ok(MultiPoly { ring, terms: self.terms.clone() })
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> MultiPoly {
        MultiPoly::from_sorted(self.ring, self.terms.iter().copied().filter(|t| t.0.degree() == d).collect())
    }
}

impl std::fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                $body(self, rhs).expect("polynomials from different rings")
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $body(&self, &rhs).expect("polynomials from different rings")
            }
        }
    };
}

forward_binop!(Add, add, MultiPoly::try_add);
forward_binop!(Sub, sub, MultiPoly::try_sub);
forward_binop!(Mul, mul, MultiPoly::try_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(self.field().neg(1))
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(p: u64, n: usize) -> PolyRing {
        PolyRing::new(PrimeField::new(p).unwrap(), n).unwrap()
    }

    fn parse(r: PolyRing, s: &str) -> MultiPoly {
        crate::poly::parse_poly(r, s).unwrap()
    }

    #[test]
    fn binomial_square() {
        let r = ring(10007, 2);
        let s = &r.var(0) + &r.var(1);
        assert_eq!(&s * &s, parse(r, "x0^2 + 2*x0*x1 + x1^2"));
        assert!((&s * &r.zero()).is_zero());
    }

    #[test]
    fn multinomial_coefficient() {
        let r = ring(10007, 3);
        let s = (&r.var(0) + &r.var(1)) + r.var(2);
        let cube = s.pow(3);
        let m = Monomial::from_exponents(&[1, 1, 1]).unwrap();
        assert_eq!(cube.coefficient(m), 6);
        assert_eq!(cube.len(), 10);
    }

    #[test]
    fn evaluation_and_derivatives() {
        let r = ring(7, 2);
        assert_eq!(parse(r, "x0*x1").evaluate(&[2, 3]), 6);
        let r = ring(10007, 2);
        assert_eq!(parse(r, "x0^2*x1").partial_derivative(0).unwrap(), parse(r, "2*x0*x1"));
        assert!(parse(r, "x0^3").partial_derivative(1).unwrap().is_zero());
        assert!(parse(r, "x0").partial_derivative(2).is_err());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ring(10007, 2).var(0);
        let b = ring(10007, 3).var(0);
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(_))));
        let c = ring(31991, 2).var(0);
        assert!(a.try_mul(&c).is_err());
    }

    #[test]
    fn substitution_matches_evaluation() {
        let r = ring(10007, 3);
        let f = parse(r, "3*x0^2*x1 + x2^3 + 5*x0*x1*x2");
        let imgs = vec![parse(r, "x0 + x1"), parse(r, "2*x2"), parse(r, "x0 + 7*x1 + x2")];
        let g = f.substitute(&imgs);
        let pt = [11, 22, 33];
        let inner: Vec<u32> = imgs.iter().map(|h| h.evaluate(&pt)).collect();
        assert_eq!(g.evaluate(&pt), f.evaluate(&inner));
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..4, n), 0u32..10007), 0..8).prop_map(move |ts| {
            let r = ring(10007, n);
            MultiPoly::from_terms(r, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e).unwrap(), c)).collect())
        })
    }

    fn arb_form(n: usize, d: u32) -> impl Strategy<Value = MultiPoly> {
        let ms = crate::poly::monomials_of_degree(n, d);
        prop::collection::vec(0u32..10007, ms.len()).prop_map(move |cs| {
            MultiPoly::from_terms(ring(10007, n), ms.iter().copied().zip(cs).collect())
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(3), b in arb_poly(3), pt in prop::collection::vec(0u32..10007, 3)) {
            let f = PrimeField::new(10007).unwrap();
            prop_assert_eq!((&a * &b).evaluate(&pt), f.mul(a.evaluate(&pt), b.evaluate(&pt)));
            prop_assert_eq!((&a + &b).evaluate(&pt), f.add(a.evaluate(&pt), b.evaluate(&pt)));
        }

        #[test]
        fn euler_identity_on_cubics(g in arb_form(5, 3)) {
            let r = g.ring();
            let mut lhs = r.zero();
            for i in 0..5 {
                lhs = &lhs + &(&r.var(i) * &g.partial_derivative(i).unwrap());
            }
            prop_assert_eq!(lhs, g.scale(3));
        }

        #[test]
        fn homogeneity_scaling(g in arb_form(4, 3), pt in prop::collection::vec(0u32..10007, 4), l in 1u32..10007) {
            let f = PrimeField::new(10007).unwrap();
            let scaled: Vec<u32> = pt.iter().map(|&x| f.mul(x, l)).collect();
            prop_assert_eq!(g.evaluate(&scaled), f.mul(f.pow(l, 3), g.evaluate(&pt)));
        }

        #[test]
        fn products_of_forms_stay_homogeneous(a in arb_form(3, 2), b in arb_form(3, 3)) {
            let p = &a * &b;
            prop_assert!(p.is_homogeneous());
            if !p.is_zero() { prop_assert_eq!(p.degree(), Some(5)); }
            let d = b.partial_derivative(1).unwrap();
            prop_assert!(d.is_homogeneous());
            if !d.is_zero() { prop_assert_eq!(d.degree(), Some(2)); }
        }
    }
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;
use crate::error::{Error, Result};

/// Dense univariate polynomial, lowest degree first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl UniPoly {
    pub fn new(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let mut p = UniPoly {
            field,
            coeffs: coeffs.into_iter().map(|c| c % field.modulus()).collect(),
        };
        p.trim();
        p
    }

    pub fn zero(field: PrimeField) -> Self {
        UniPoly { field, coeffs: vec![] }
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    /// The monomial x.
    pub fn x(field: PrimeField) -> Self {
        Self::new(field, vec![0, 1])
    }

    pub fn from_roots(field: PrimeField, roots: &[u32]) -> Self {
        roots.iter().fold(Self::constant(field, 1), |acc, &r| {
            acc.mul(&Self::new(field, vec![field.neg(r % field.modulus()), 1]))
        })
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, a: u32) -> u32 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.mul_add(c, acc, a))
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add(a, b)
            })
            .collect();
        UniPoly::new(f, c)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, s: u32) -> UniPoly {
        let f = self.field;
        UniPoly::new(f, self.coeffs.iter().map(|&c| f.mul(c, s)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let f = self.field;
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.mul_add(c[i + j], a, b);
            }
        }
        UniPoly::new(f, c)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let f = self.field;
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = f.inv_nz(d.lead());
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly::zero(f), self.clone());
        }
        let mut q = vec![0u32; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], inv);
            if c == 0 {
                continue;
            }
            q[i - dd] = c;
            let nc = f.neg(c);
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[i - dd + j] = f.mul_add(r[i - dd + j], nc, b);
            }
        }
        r.truncate(dd);
        (UniPoly::new(f, q), UniPoly::new(f, r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv_nz(self.lead()))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &UniPoly) -> UniPoly {
        let mut base = self.rem(m);
        let mut acc = UniPoly::constant(self.field, 1).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        let f = self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.reduce(i as u64)))
            .collect();
        UniPoly::new(f, c)
    }
}

/// All distinct roots of `f` in F_p, sorted ascending.
///
/// Splits off the product of the distinct linear factors as `gcd(f, x^p - x)`, then
/// separates them by random `gcd` with `(x + c)^((p-1)/2) - 1`. The splitting randomness
/// comes from a fixed internal seed, so the result is deterministic.
pub fn uni_roots(f: &UniPoly) -> Result<Vec<u32>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field();
    let p = field.modulus();
    let x = UniPoly::x(field);
    let f = f.monic();
    if f.degree() == Some(0) {
        return Ok(vec![]);
    }
    let xp = x.powmod(p as u64, &f);
    let g = f.gcd(&xp.sub(&x));
    let mut roots = Vec::new();
    if p == 2 {
        roots.extend((0..2).filter(|&a| g.eval(a) == 0));
        return Ok(roots);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x005e_ed0f_2007);
    split(&g, &mut rng, &mut roots);
    roots.sort_unstable();
    Ok(roots)
}

fn split(g: &UniPoly, rng: &mut ChaCha8Rng, out: &mut Vec<u32>) {
    let field = g.field();
    let p = field.modulus();
    match g.degree() {
        None | Some(0) => return,
        Some(1) => {
            // x + c0 with monic g
            out.push(field.neg(g.coeffs()[0]));
            return;
        }
        _ => {}
    }
    loop {
        let c = rng.gen_range(0..p);
        let shifted = UniPoly::new(field, vec![c, 1]);
        let h = shifted
            .powmod(((p - 1) / 2) as u64, g)
            .sub(&UniPoly::constant(field, 1));
        let d = g.gcd(&h);
        let dd = d.degree().unwrap_or(0);
        if dd > 0 && Some(dd) < g.degree() {
            let (q, _) = g.divrem(&d);
            split(&d, rng, out);
            split(&q.monic(), rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn quadratic_examples_mod_7() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(uni_roots(&UniPoly::new(f, vec![6, 0, 1])).unwrap(), vec![1, 6]);
        assert!(uni_roots(&UniPoly::new(f, vec![1, 0, 1])).unwrap().is_empty());
        assert_eq!(uni_roots(&UniPoly::zero(f)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn product_of_known_factors() {
        let f = PrimeField::new(10007).unwrap();
        let roots = [5, 17, 17, 9000, 3, 10006];
        let g = UniPoly::from_roots(f, &roots).mul(&UniPoly::new(f, vec![1, 0, 1, 0, 1, 1]));
        let mut expected: Vec<u32> = roots.to_vec();
        expected.sort_unstable();
        expected.dedup();
        let got = uni_roots(&g).unwrap();
        // the extra quintic may contribute roots of its own; all given ones must be there
        for r in &expected {
            assert!(got.contains(r));
        }
        for r in &got {
            assert_eq!(g.eval(*r), 0);
        }
    }

    #[test]
    fn divrem_reconstructs() {
        let f = PrimeField::new(101).unwrap();
        let a = UniPoly::new(f, vec![3, 1, 4, 1, 5, 9, 2, 6]);
        let b = UniPoly::new(f, vec![2, 7, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    proptest! {
        #[test]
        fn matches_exhaustive_scan(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 31, 53, 97, 101]),
                                   coeffs in prop::collection::vec(0u32..1000, 1..9)) {
            let f = PrimeField::new(p).unwrap();
            let g = UniPoly::new(f, coeffs);
            prop_assume!(!g.is_zero());
            let scan: Vec<u32> = (0..f.modulus()).filter(|&a| g.eval(a) == 0).collect();
            prop_assert_eq!(uni_roots(&g).unwrap(), scan);
        }

        #[test]
        fn exact_roots_of_split_products(rs in prop::collection::btree_set(0u32..10007, 1..12)) {
            let f = PrimeField::new(10007).unwrap();
            let roots: Vec<u32> = rs.into_iter().collect();
            prop_assert_eq!(uni_roots(&UniPoly::from_roots(f, &roots)).unwrap(), roots);
        }
    }
}

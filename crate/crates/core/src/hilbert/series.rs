use serde::{Deserialize, Serialize};

use crate::groebner::Ideal;
use crate::poly::{binomial, Monomial};

/// Hilbert–Poincaré series of `R/I` as `N(t) / (1 - t)^n` with `n` the number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    nvars: usize,
    numerator: Vec<i64>,
}

impl HilbertSeries {
    pub fn new(nvars: usize, mut numerator: Vec<i64>) -> Self {
        trim(&mut numerator);
        HilbertSeries { nvars, numerator }
    }

    /// Series of `R / (monomial ideal)`.
    pub fn of_monomial_ideal(nvars: usize, gens: &[Monomial]) -> Self {
        Self::new(nvars, numerator(gens.to_vec()))
    }

    /// Series of `R/I` computed from the initial ideal (exact).
    pub fn of(ideal: &Ideal) -> Self {
        assert!(ideal.is_homogeneous(), "Hilbert series of an inhomogeneous ideal");
        Self::of_monomial_ideal(ideal.ring().nvars, ideal.gb().leads())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// `dim (R/I)_d`.
    pub fn value(&self, d: i64) -> i64 {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(k, &c)| c * binomial(d - k as i64 + n - 1, n - 1) as i64)
            .sum()
    }

    /// Numerator with all `(1 - t)` factors removed, and the Krull dimension.
    pub fn reduced(&self) -> (Vec<i64>, usize) {
        let mut num = self.numerator.clone();
        let mut dim = self.nvars;
        while dim > 0 && !num.is_empty() && num.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t)
            let mut q = vec![0i64; num.len() - 1];
            let mut acc = 0;
            for k in 0..num.len() - 1 {
                acc += num[k];
                q[k] = acc;
            }
            num = q;
            trim(&mut num);
            dim -= 1;
        }
        (num, dim)
    }

    /// Projective dimension (`-1` for the empty scheme).
    pub fn projective_dim(&self) -> i64 {
        if self.numerator.is_empty() {
            return -1;
        }
        self.reduced().1 as i64 - 1
    }

    /// Degree of the scheme (leading coefficient times `dim!`).
    pub fn degree(&self) -> i64 {
        let (num, _) = self.reduced();
        num.iter().sum()
    }

    /// Coefficients `c_i` of the Hilbert polynomial in the basis `binom(t, i)`.
    pub fn hilbert_polynomial(&self) -> Vec<i64> {
        let (num, dim) = self.reduced();
        if dim == 0 {
            return vec![];
        }
        // HP(t) = sum_k num_k binom(t - k + dim - 1, dim - 1); take finite differences at t = 0
        let k = dim - 1;
        let vals: Vec<i64> = (0..=k as i64)
            .map(|t| {
                num.iter()
                    .enumerate()
                    .map(|(j, &c)| c * poly_binomial(t - j as i64 + k as i64, k as i64))
                    .sum()
            })
            .collect();
        newton_coefficients(&vals)
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.nvars, other.nvars);
        HilbertSeries::new(self.nvars, combine(&self.numerator, &other.numerator, -1))
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.nvars, other.nvars);
        HilbertSeries::new(self.nvars, combine(&self.numerator, &other.numerator, 1))
    }

    /// Divides the numerator by `t^e`; `None` if it is not divisible.
    pub fn shift_down(&self, e: usize) -> Option<HilbertSeries> {
        if self.numerator.iter().take(e).any(|&c| c != 0) {
            return None;
        }
        Some(HilbertSeries::new(self.nvars, self.numerator.iter().skip(e).copied().collect()))
    }
}

/// Binomial coefficient extended to negative upper arguments as a polynomial in `n`
/// (so that it agrees with the Hilbert polynomial below the regularity).
fn poly_binomial(n: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..k {
        num *= (n - i) as i128;
        den *= (i + 1) as i128;
    }
    (num / den) as i64
}

/// Coefficients in the basis `binom(t, i)` from the values at `t = 0..=k`.
pub(crate) fn newton_coefficients(vals: &[i64]) -> Vec<i64> {
    let mut diffs = vals.to_vec();
    let mut out = Vec::with_capacity(vals.len());
    for _ in 0..vals.len() {
        out.push(diffs[0]);
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    out
}

fn combine(a: &[i64], b: &[i64], sign: i64) -> Vec<i64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + sign * b.get(i).copied().unwrap_or(0))
        .collect()
}

fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_minus_t_pow(e: u32) -> Vec<i64> {
    let mut v = vec![0i64; e as usize + 1];
    v[0] += 1;
    v[e as usize] -= 1;
    v
}

fn minimalize(gens: &mut Vec<Monomial>) {
    gens.sort_by_key(|m| (m.degree(), m.raw()));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for &m in gens.iter() {
        if !kept.iter().any(|k| k.divides(m)) {
            kept.push(m);
        }
    }
    *gens = kept;
}

/// Numerator of the Hilbert series of `R/M` by pivoting (Bigatti's recursion).
fn numerator(mut gens: Vec<Monomial>) -> Vec<i64> {
    minimalize(&mut gens);
    if gens.is_empty() {
        return vec![1];
    }
    let mut acc = Monomial::ONE;
    let mut coprime = true;
    for &m in &gens {
        if !acc.is_coprime(m) {
            coprime = false;
            break;
        }
        acc = acc.mul(m);
    }
    if coprime {
        let mut out = vec![1i64];
        for &m in &gens {
            out = mul(&out, &one_minus_t_pow(m.degree()));
        }
        trim(&mut out);
        return out;
    }
    // variable occurring in the most generators
    let nv = gens.iter().map(|m| m.support_len()).max().unwrap_or(0);
    let (var, _) = (0..nv)
        .map(|i| (i, gens.iter().filter(|m| m.exponent(i) > 0).count()))
        .max_by_key(|&(i, c)| (c, std::cmp::Reverse(i)))
        .unwrap();
    let mut exps: Vec<u32> = gens.iter().map(|m| m.exponent(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let pivot = Monomial::ONE.with_exponent(var, e);
    let mut plus = gens.clone();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens.iter().map(|&m| m.gcd(pivot).divide_into(m).unwrap()).collect();
    let a = numerator(plus);
    let mut b = numerator(colon);
    let mut shifted = vec![0i64; e as usize];
    shifted.append(&mut b);
    let mut out = combine(&a, &shifted, 1);
    trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::monomials_of_degree;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn simple_series() {
        // k[x,y,z]/(x^2, y^2): (1 - t^2)^2 / (1 - t)^3
        let s = HilbertSeries::of_monomial_ideal(3, &[m(&[2, 0, 0]), m(&[0, 2, 0])]);
        assert_eq!(s.numerator(), &[1, 0, -2, 0, 1]);
        assert_eq!(s.projective_dim(), 0);
        assert_eq!(s.degree(), 4);
        // twisted cubic initial ideal (x1^2, x1x2, x2^2) in degrevlex
        let tc = HilbertSeries::of_monomial_ideal(4, &[m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0])]);
        assert_eq!(tc.projective_dim(), 1);
        assert_eq!(tc.degree(), 3);
        assert_eq!(tc.hilbert_polynomial(), vec![1, 3]);
        assert_eq!(HilbertSeries::of_monomial_ideal(3, &[Monomial::ONE]).projective_dim(), -1);
    }

    proptest! {
        #[test]
        fn series_matches_monomial_count(gens in prop::collection::vec(prop::collection::vec(0u32..4, 4), 1..7)) {
            let ms: Vec<Monomial> = gens.iter().map(|e| m(e)).collect();
            let s = HilbertSeries::of_monomial_ideal(4, &ms);
            for d in 0..9u32 {
                let count = monomials_of_degree(4, d).into_iter().filter(|u| !ms.iter().any(|g| g.divides(*u))).count();
                prop_assert_eq!(s.value(d as i64), count as i64);
            }
        }
    }
}

//! Hilbert functions, Hilbert polynomials and the graded-dimension checks built on them.

mod series;

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

pub use series::HilbertSeries;

use crate::algebra::{Matrix, RowSpace};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, Ideal};
use crate::poly::{binomial, monomials_of_degree, MonomialOrder, MultiPoly};

/// Hilbert function values on a window with the fitted Hilbert polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertProfile {
    /// `(d, dim (R/I)_d)` over the window.
    pub hf: Vec<(u32, u64)>,
    /// Hilbert polynomial in the basis `binom(t, i)`.
    #[serde(skip)]
    pub poly: Vec<i64>,
    /// Projective dimension; `-1` for the empty scheme.
    pub dim: i64,
    pub degree: i64,
    pub pa: i64,
}

impl HilbertProfile {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("profile serializes")
    }

    /// Hilbert polynomial at `t`.
    pub fn hp(&self, t: i64) -> i64 {
        self.poly
            .iter()
            .enumerate()
            .map(|(i, &c)| c * binom_poly(t, i as i64))
            .sum()
    }
}

fn binom_poly(t: i64, k: i64) -> i64 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..k {
        num *= (t - i) as i128;
        den *= (i + 1) as i128;
    }
    (num / den) as i64
}

/// `dim I_d` as the rank of `{m g : g generator, deg m = d - deg g}`; also returns the codimension
/// `binom(n+d, n) - dim`.
pub fn graded_piece_dim(ideal: &Ideal, d: u32) -> (usize, usize) {
    let ring = ideal.ring();
    let monos = monomials_of_degree(ring.nvars, d);
    let index: rustc_hash::FxHashMap<_, _> = monos.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut space = RowSpace::new(ring.field, monos.len());
    'outer: for g in ideal.gens() {
        let Some(e) = g.degree() else { continue };
        if e > d || !g.is_homogeneous() {
            continue;
        }
        for m in monomials_of_degree(ring.nvars, d - e) {
            let mut v = vec![0u32; monos.len()];
            for &(t, c) in g.terms() {
                v[index[&t.mul(m)]] = c;
            }
            space.insert(v);
            if space.rank() == monos.len() {
                break 'outer;
            }
        }
    }
    (space.rank(), monos.len() - space.rank())
}

/// Hilbert function over `range` (default: seven degrees above the top generator degree),
/// with a Hilbert polynomial of degree at most 2 fitted to its tail.
///
/// The fit must reproduce at least the last four values and must agree with the Hilbert
/// polynomial read off the exact Hilbert series; otherwise the window is below the
/// regularity and the raw values are returned in the error.
pub fn hilbert_profile(ideal: &Ideal, range: Option<RangeInclusive<u32>>) -> Result<HilbertProfile> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let series = HilbertSeries::of(ideal);
    let top = ideal.gb().max_degree().max(ideal.max_gen_degree());
    let range = range.unwrap_or(top + 1..=top + 7);
    let hf: Vec<(u32, u64)> = range.clone().map(|d| (d, series.value(d as i64) as u64)).collect();
    let exact = series.hilbert_polynomial();
    if exact.len() > 3 {
        return Err(Error::FitDegreeTooLarge(exact.len() - 1));
    }
    let fit = fit_tail(&hf).ok_or_else(|| Error::RegularityNotReached { values: hf.clone() })?;
    let mut exact_trim = exact.clone();
    while exact_trim.last() == Some(&0) {
        exact_trim.pop();
    }
    if fit != exact_trim {
        return Err(Error::RegularityNotReached { values: hf });
    }
    let (dim, degree, pa) = invariants(&fit);
    Ok(HilbertProfile {
        hf,
        poly: fit,
        dim,
        degree,
        pa,
    })
}

fn invariants(poly: &[i64]) -> (i64, i64, i64) {
    if poly.is_empty() {
        return (-1, 0, 0);
    }
    let k = poly.len() as i64 - 1;
    let degree = poly[poly.len() - 1];
    let sign = if k % 2 == 0 { 1 } else { -1 };
    (k, degree, sign * (poly[0] - 1))
}

/// Smallest-degree polynomial (≤ 2) through the tail of `hf` that matches at least four
/// trailing values. Returned in the basis `binom(t, i)`, trailing zeros removed.
fn fit_tail(hf: &[(u32, u64)]) -> Option<Vec<i64>> {
    for k in 0..=2usize {
        if hf.len() < (k + 1).max(4) {
            return None;
        }
        let tail = &hf[hf.len() - k - 1..];
        // Lagrange through the tail, evaluated at t = 0..=k, then Newton coefficients
        let vals: Vec<i64> = (0..=k as i64).map(|t| lagrange(tail, t)).collect::<Option<Vec<_>>>()?;
        let mut coeffs = series_newton(&vals);
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let matches = hf
            .iter()
            .rev()
            .take_while(|&&(d, v)| eval_newton(&coeffs, d as i64) == v as i64)
            .count();
        if matches >= 4 {
            return Some(coeffs);
        }
    }
    None
}

fn series_newton(vals: &[i64]) -> Vec<i64> {
    let mut diffs = vals.to_vec();
    let mut out = Vec::new();
    for _ in 0..vals.len() {
        out.push(diffs[0]);
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    out
}

fn eval_newton(c: &[i64], t: i64) -> i64 {
    c.iter().enumerate().map(|(i, &x)| x * binom_poly(t, i as i64)).sum()
}

/// Exact Lagrange interpolation at integer `t`; `None` if the value is not an integer.
fn lagrange(pts: &[(u32, u64)], t: i64) -> Option<i64> {
    let mut num_total: i128 = 0;
    let mut den_total: i128 = 1;
    for (i, &(xi, yi)) in pts.iter().enumerate() {
        let mut num: i128 = yi as i128;
        let mut den: i128 = 1;
        for (j, &(xj, _)) in pts.iter().enumerate() {
            if i != j {
                num *= (t - xj as i64) as i128;
                den *= (xi as i64 - xj as i64) as i128;
            }
        }
        // num_total/den_total + num/den
        num_total = num_total * den + num * den_total;
        den_total *= den;
    }
    (num_total % den_total == 0).then(|| (num_total / den_total) as i64)
}

/// Data about the multiplication map `μ: R_1 ⊗ I_f → I_{f+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationReport {
    pub f: u32,
    /// `dim I_f`.
    pub dim_f: usize,
    /// `dim I_{f+1}`.
    pub dim_next: usize,
    /// `(n+1) · dim I_f`.
    pub source_dim: usize,
    pub mu_rank: usize,
    /// The elements of degree ≤ f generate the whole ideal.
    pub generated: bool,
}

/// Whether the (saturated) ideal is generated in degrees `≤ f`, with the rank of `μ`.
///
/// `μ` surjective only shows generation in degree `f + 1`; the report additionally checks that
/// the basis elements of degree `≤ f` already have the same reduced basis as the whole ideal.
pub fn generated_in_degree(ideal: &Ideal, f: u32) -> GenerationReport {
    let ring = ideal.ring();
    let basis_f = ideal.basis_in_degree(f);
    let dim_next = ideal.dim_in_degree(f + 1);
    let products: Vec<MultiPoly> = basis_f
        .iter()
        .flat_map(|q| (0..ring.nvars).map(move |i| (i, q)))
        .map(|(i, q)| q.mul_term(crate::poly::Monomial::var(i), 1))
        .collect();
    let mu_rank = rank_of_forms(&products, ring.nvars, f + 1, ring.field);
    let low: Vec<MultiPoly> = ideal
        .gb()
        .elements()
        .iter()
        .filter(|g| g.degree().is_some_and(|e| e <= f))
        .cloned()
        .collect();
    let generated = mu_rank == dim_next && buchberger(ring, &low, MonomialOrder::Degrevlex) == *ideal.gb();
    GenerationReport {
        f,
        dim_f: basis_f.len(),
        dim_next,
        source_dim: ring.nvars * basis_f.len(),
        mu_rank,
        generated,
    }
}

/// Number of minimal generators in degree `d`: `dim I_d - dim (R_1 · I_{d-1})`.
pub fn new_generators(ideal: &Ideal, d: u32) -> usize {
    let ring = ideal.ring();
    let dim_d = ideal.dim_in_degree(d);
    if d == 0 {
        return dim_d;
    }
    let products: Vec<MultiPoly> = ideal
        .basis_in_degree(d - 1)
        .iter()
        .flat_map(|q| (0..ring.nvars).map(move |i| q.mul_term(crate::poly::Monomial::var(i), 1)))
        .collect();
    dim_d - rank_of_forms(&products, ring.nvars, d, ring.field)
}

fn rank_of_forms(forms: &[MultiPoly], nvars: usize, d: u32, field: crate::algebra::PrimeField) -> usize {
    if forms.is_empty() {
        return 0;
    }
    let monos = monomials_of_degree(nvars, d);
    let index: rustc_hash::FxHashMap<_, _> = monos.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut m = Matrix::zeros(field, forms.len(), monos.len());
    for (r, f) in forms.iter().enumerate() {
        for &(t, c) in f.terms() {
            m.set(r, index[&t], c);
        }
    }
    m.rank()
}

/// Codimension of `I_d` in `R_d`, i.e. the Hilbert function of `R/I`.
pub fn hilbert_function(ideal: &Ideal, d: u32) -> u64 {
    let n = ideal.ring().nvars as i64;
    binomial(n - 1 + d as i64, n - 1) - ideal.dim_in_degree(d) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::poly::{parse_poly, PolyRing};

    fn twisted_cubic() -> Ideal {
        let r = PolyRing::new(PrimeField::new(10007).unwrap(), 4).unwrap();
        Ideal::new(
            r,
            ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"].iter().map(|s| parse_poly(r, s).unwrap()).collect(),
        )
    }

    #[test]
    fn twisted_cubic_profile() {
        let p = hilbert_profile(&twisted_cubic(), None).unwrap();
        assert_eq!((p.dim, p.degree, p.pa), (1, 3, 0));
        assert_eq!(p.poly, vec![1, 3]);
        assert_eq!(p.hp(5), 16);
        let j = p.to_json();
        assert_eq!(j["degree"], 3);
        assert_eq!(j["pa"], 0);
        assert_eq!(j["hf"][0], serde_json::json!([3, 10]));
    }

    #[test]
    fn generation_of_twisted_cubic_and_ci() {
        let r = generated_in_degree(&twisted_cubic(), 2);
        assert!(r.generated);
        assert_eq!((r.dim_f, r.dim_next, r.mu_rank), (3, 10, 10));
        let ring = PolyRing::new(PrimeField::new(10007).unwrap(), 4).unwrap();
        let ci = Ideal::new(ring, vec![parse_poly(ring, "x0^2 + x1*x2").unwrap(), parse_poly(ring, "x3^2 - x0*x1").unwrap()]);
        assert!(generated_in_degree(&ci, 2).generated);
        assert_eq!(new_generators(&ci, 2), 2);
        assert_eq!(new_generators(&ci, 3), 0);
    }

    #[test]
    fn graded_piece_matches_basis_count() {
        let i = twisted_cubic();
        for d in 0..6 {
            assert_eq!(graded_piece_dim(&i, d).0, i.dim_in_degree(d));
        }
        let zero = Ideal::zero(i.ring());
        assert_eq!(graded_piece_dim(&zero, 3), (0, 20));
    }

    #[test]
    fn fitting_rules() {
        // constant tail too short to trust
        assert!(fit_tail(&[(1, 5), (2, 7), (3, 9), (4, 9), (5, 9)]).is_none());
        assert_eq!(fit_tail(&[(1, 1), (2, 9), (3, 9), (4, 9), (5, 9)]), Some(vec![9]));
        // surface of degree 4: HP = 2t^2 + 2 = 2 + 2 binom(t,1) + 4 binom(t,2)
        let vals: Vec<(u32, u64)> = (3..10).map(|t| (t, (2 * t * t + 2) as u64)).collect();
        assert_eq!(fit_tail(&vals), Some(vec![2, 2, 4]));
        assert_eq!(invariants(&[2, 2, 4]), (2, 4, 1));
    }
}

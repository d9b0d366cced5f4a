//! Jacobian criteria: singular schemes and node checks.

use log::debug;
use rustc_hash::FxHashMap;

use super::points::normalize_point;
use super::random_combinations;
use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::groebner::{saturate_irrelevant, Ideal};
use crate::poly::{binomial, MultiPoly};
use crate::rng;

/// Above this many `c × c` minors the minors of random combinations are used instead.
const EXACT_MINOR_LIMIT: u64 = 200;
const RANDOM_ROUNDS: usize = 3;

/// Rows are generators, columns variables.
pub fn jacobian(gens: &[MultiPoly]) -> Vec<Vec<MultiPoly>> {
    gens.iter().map(|g| g.gradient()).collect()
}

/// `(I + c×c minors of the Jacobian) : m^∞` for a saturated ideal of codimension `c`.
///
/// With few generators every minor of a minimal generating set is used. Otherwise each
/// round takes `c` random elements `h_1..h_c` of `I` (`c - 1` from the lowest degree, one from
/// the top generator degree) and uses all maximal minors of their Jacobian. Since
/// `∂h = Σ a ∂g + Σ g ∂a`, those minors lie in `I` plus the true Jacobian ideal, so the result
/// always contains the singular scheme; it is smooth exactly when the result is empty, and a
/// nonempty result is only as large as the spurious intersections of the rounds.
pub fn singular_scheme(ideal: &Ideal, c: usize) -> Result<Ideal> {
    let ring = ideal.ring();
    if c == 0 || c > ring.nvars {
        return Err(Error::Precondition(format!("codimension {c} in {} variables", ring.nvars)));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let gens = ideal.minimal_generators();
    let count = binomial(gens.len() as i64, c as i64) * binomial(ring.nvars as i64, c as i64);
    let minors = if count <= EXACT_MINOR_LIMIT {
        debug!("singular scheme: {count} exact minors");
        all_minors(&jacobian(&gens), c)
    } else {
        debug!("singular scheme: {count} minors, using {RANDOM_ROUNDS} random rounds");
        let degs: Vec<u32> = gens.iter().filter_map(|g| g.degree()).collect();
        let (lo, hi) = (*degs.iter().min().unwrap(), *degs.iter().max().unwrap());
        let low = ideal.basis_in_degree(lo);
        let high = ideal.basis_in_degree(hi);
        let mut rng = rng::stream(0x51c, "jacobian-combinations");
        let mut out = Vec::new();
        for _ in 0..RANDOM_ROUNDS {
            let mut h = random_combinations(&mut rng, ring.field, &low, c - 1);
            h.extend(random_combinations(&mut rng, ring.field, &high, 1));
            out.extend(all_minors(&jacobian(&h), c));
        }
        out
    };
    Ok(saturate_irrelevant(&ideal.with(&minors)))
}

/// All `c × c` minors, by Laplace expansion with shared sub-minors.
fn all_minors(m: &[Vec<MultiPoly>], c: usize) -> Vec<MultiPoly> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if rows < c || cols < c {
        return vec![];
    }
    let mut memo: FxHashMap<(u64, u64), MultiPoly> = FxHashMap::default();
    let mut out = Vec::new();
    for rmask in subsets(rows, c) {
        for cmask in subsets(cols, c) {
            let d = det(m, rmask, cmask, &mut memo);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|s| s.count_ones() as usize == k).collect()
}

fn det(m: &[Vec<MultiPoly>], rmask: u64, cmask: u64, memo: &mut FxHashMap<(u64, u64), MultiPoly>) -> MultiPoly {
    if let Some(v) = memo.get(&(rmask, cmask)) {
        return v.clone();
    }
    let r = rmask.trailing_zeros() as usize;
    let ring = m[r][0].ring();
    let rest = rmask & !(1 << r);
    let mut acc = ring.zero();
    let field = ring.field;
    let mut pos = 0;
    for j in 0..64 {
        if cmask & (1 << j) == 0 {
            continue;
        }
        let entry = &m[r][j];
        if !entry.is_zero() {
            let sub = if rest == 0 { ring.one() } else { det(m, rest, cmask & !(1 << j), memo) };
            if !sub.is_zero() {
                let term = entry * &sub;
                acc = acc.add_scaled(&term, if pos % 2 == 0 { 1 } else { field.neg(1) });
            }
        }
        pos += 1;
    }
    memo.insert((rmask, cmask), acc.clone());
    acc
}

/// Whether `x` is an ordinary double point of the curve cut out by `ideal` (codimension `c`):
/// the Jacobian has rank `c - 1` at `x`, and the second-order part of the equation left over
/// on the smooth surface germ has rank 2 on its tangent plane.
pub fn is_ordinary_node(ideal: &Ideal, c: usize, x: &[u32]) -> Result<bool> {
    let ring = ideal.ring();
    let field = ring.field;
    let n = ring.nvars;
    let x = normalize_point(field, x);
    let gens = ideal.minimal_generators();
    if gens.iter().any(|g| g.evaluate(&x) != 0) {
        return Ok(false);
    }
    // affine chart where x_i = 1
    let i0 = x.iter().position(|&v| v != 0).ok_or_else(|| Error::Degenerate("zero vector".into()))?;
    let chart: Vec<usize> = (0..n).filter(|&j| j != i0).collect();
    let grads: Vec<Vec<MultiPoly>> = jacobian(&gens);
    let jac = Matrix::from_fn(field, gens.len(), chart.len(), |r, k| grads[r][chart[k]].evaluate(&x));
    if jac.rank() != c - 1 {
        return Ok(false);
    }
    // a combination of the generators with vanishing differential at x
    let lk = jac.left_kernel_basis();
    let mut rng = rng::stream(0x40de, "node-combination");
    let coeffs = rng::residues(&mut rng, field, lk.len());
    let weights: Vec<u32> = (0..gens.len())
        .map(|r| lk.iter().zip(&coeffs).fold(0u32, |acc, (v, &c)| field.mul_add(acc, c, v[r])))
        .collect();
    let tangent = jac.kernel_basis();
    if tangent.len() != 2 {
        return Err(Error::Precondition(format!("tangent plane of dimension {}", tangent.len())));
    }
    let hess = Matrix::from_fn(field, chart.len(), chart.len(), |a, b| {
        (0..gens.len()).filter(|&r| weights[r] != 0).fold(0u32, |acc, r| {
            let second = grads[r][chart[a]].partial_derivative(chart[b]).expect("index in range");
            field.mul_add(acc, weights[r], second.evaluate(&x))
        })
    });
    let restricted = Matrix::from_fn(field, 2, 2, |a, b| {
        let hv = hess.mul_vec(&tangent[b]);
        tangent[a].iter().zip(&hv).fold(0u32, |acc, (&u, &v)| field.mul_add(acc, u, v))
    });
    Ok(restricted.rank() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::hilbert::HilbertSeries;
    use crate::poly::{parse_poly, PolyRing};

    fn ring(n: usize) -> PolyRing {
        PolyRing::new(PrimeField::new(10007).unwrap(), n).unwrap()
    }

    fn ideal(r: PolyRing, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_poly(r, s).unwrap()).collect())
    }

    #[test]
    fn smooth_quadric_surface() {
        let r = ring(4);
        let s = singular_scheme(&ideal(r, &["x0*x1 - x2*x3"]), 1).unwrap();
        assert!(s.is_unit());
    }

    #[test]
    fn two_lines_meet_in_a_node() {
        let r = ring(3);
        let i = ideal(r, &["x0*x1"]);
        let s = singular_scheme(&i, 1).unwrap();
        assert_eq!(s, ideal(r, &["x0", "x1"]));
        assert!(is_ordinary_node(&i, 1, &[0, 0, 1]).unwrap());
        assert!(!is_ordinary_node(&i, 1, &[1, 0, 0]).unwrap());
        // a cusp is not ordinary
        let cusp = ideal(r, &["x1^2*x2 - x0^3"]);
        assert!(!is_ordinary_node(&cusp, 1, &[0, 0, 1]).unwrap());
    }

    #[test]
    fn twisted_cubic_is_smooth_and_nodal_space_curve() {
        let r = ring(4);
        let tc = ideal(r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
        assert!(singular_scheme(&tc, 2).unwrap().is_unit());
        // nodal plane cubic in the plane x3 = 0
        let nodal = ideal(r, &["x3", "x1^2*x2 - x0^2*x2 - x0^3"]);
        let s = singular_scheme(&nodal, 2).unwrap();
        assert_eq!(HilbertSeries::of(&s).degree(), 1);
        assert!(is_ordinary_node(&nodal, 2, &[0, 0, 1, 0]).unwrap());
    }

    #[test]
    fn random_route_agrees_on_a_smooth_curve() {
        // many generators force the randomized route: rational normal quintic in P^5
        let r = ring(6);
        let mut gens = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                gens.push(format!("x{i}*x{} - x{}*x{j}", j + 1, i + 1));
            }
        }
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let rnc = ideal(r, &refs);
        assert!(binomial(rnc.minimal_generators().len() as i64, 4) * binomial(6, 4) > EXACT_MINOR_LIMIT);
        assert!(singular_scheme(&rnc, 4).unwrap().is_unit());
    }

    #[test]
    fn minors_of_a_generic_matrix() {
        let r = ring(4);
        let m: Vec<Vec<MultiPoly>> = vec![
            vec![r.var(0), r.var(1), r.var(2)],
            vec![r.var(1), r.var(2), r.var(3)],
        ];
        let minors = all_minors(&m, 2);
        assert_eq!(Ideal::new(r, minors), ideal(r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]));
    }
}

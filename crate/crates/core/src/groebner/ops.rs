//! Elimination, quotients, intersections and saturation.
//!
//! Homogeneous quotients and intersections are assembled degree by degree from kernels of
//! normal-form maps. The result is accepted only once its Hilbert series equals a target
//! series derived from exact sequences, which proves the degree-wise pieces generate the
//! whole ideal. The tag-variable constructions are kept as an independent route.

use log::debug;

use super::basis::buchberger;
use super::engine::Engine;
use super::ideal::Ideal;
use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::poly::{binomial, monomials_of_degree, Monomial, MonomialOrder, MultiPoly, PolyRing};
use crate::rng;

const DEGREE_CAP: u32 = 60;
const SATURATION_CAP: usize = 50;

/// `I ∩ k[x_0..x_{keep-1}]`, returned in the ring of the kept variables.
pub fn elimination_ideal(ideal: &Ideal, keep: usize) -> Result<Ideal> {
    let ring = ideal.ring();
    if keep == 0 || keep > ring.nvars {
        return Err(Error::VariableOutOfRange { index: keep, nvars: ring.nvars });
    }
    let small = PolyRing::new(ring.field, keep)?;
    if keep == ring.nvars {
        return Ok(ideal.clone());
    }
    let order = MonomialOrder::eliminate_after(keep, ring.nvars);
    let gb = ideal.gb_with(order);
    let kept: Vec<MultiPoly> = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|t| order.is_kept(t.0)))
        .map(|g| g.restrict(small).expect("kept element uses only kept variables"))
        .collect();
    Ok(Ideal::new(small, kept))
}

fn nonzero_gens(j: &Ideal) -> Result<Vec<MultiPoly>> {
    if j.gens().is_empty() {
        return Err(Error::QuotientByZero);
    }
    Ok(j.gens().to_vec())
}

/// `(I : J) = {f : f J ⊆ I}`.
pub fn ideal_quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let jg = nonzero_gens(j)?;
    let ring = i.ring();
    ring.check(&j.ring())?;
    if !i.is_homogeneous() || !j.is_homogeneous() {
        return quotient_by_elimination(i, j);
    }
    if jg.iter().all(|g| i.contains(g)) {
        return Ok(Ideal::unit(ring));
    }
    if i.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if jg.len() > 1 {
        let g = generic_element(j, "quotient-combination");
        if let Some(k) = quotient_attempt(i, &jg, &g)? {
            return Ok(k);
        }
        debug!("quotient by a generic element differs from the full quotient; intersecting principal quotients");
        let mut acc: Option<Ideal> = None;
        for gj in &jg {
            let q = principal_quotient(i, gj)?;
            acc = Some(match acc {
                None => q,
                Some(a) => intersect(&a, &q)?,
            });
        }
        return Ok(acc.unwrap());
    }
    principal_quotient(i, &jg[0])
}

fn principal_quotient(i: &Ideal, g: &MultiPoly) -> Result<Ideal> {
    if i.contains(g) {
        return Ok(Ideal::unit(i.ring()));
    }
    quotient_attempt(i, std::slice::from_ref(g), g)?
        .ok_or_else(|| Error::Verification { claim: "principal quotient matches its Hilbert series".into() })
}

/// Random homogeneous element of `J` in the top generator degree.
fn generic_element(j: &Ideal, label: &str) -> MultiPoly {
    let ring = j.ring();
    let e = j.max_gen_degree();
    let mut rng = rng::stream(0x9e37_79b9, label);
    let mut acc = ring.zero();
    for g in j.gens() {
        let dg = g.degree().unwrap();
        for m in monomials_of_degree(ring.nvars, e - dg) {
            let c = rng::nonzero_residue(&mut rng, ring.field);
            acc = acc.add_scaled(&g.mul_term(m, 1), c);
        }
    }
    acc
}

/// Tries to build `(I : J)` and certify it equals `(I : g)` for `g ∈ J`.
/// Returns `None` when the two quotients differ.
fn quotient_attempt(i: &Ideal, jg: &[MultiPoly], g: &MultiPoly) -> Result<Option<Ideal>> {
    let ring = i.ring();
    let e = g.degree().unwrap() as usize;
    let hs_i = HilbertSeries::of(i);
    let hs_ig = HilbertSeries::of(&i.with(std::slice::from_ref(g)));
    let target = hs_i
        .sub(&hs_ig)
        .shift_down(e)
        .ok_or_else(|| Error::Verification { claim: "exact sequence for the quotient".into() })?;
    let seeds = i.gb().elements().to_vec();
    build_certified(ring, &target, &seeds, |d| quotient_piece(i, jg, d))
}

/// Kernel of `f ↦ (NF_I(f g_j))_j` on `(R/I)_d`, returned as polynomials.
fn quotient_piece(i: &Ideal, jg: &[MultiPoly], d: u32) -> Vec<MultiPoly> {
    let ring = i.ring();
    let field = ring.field;
    let p = field.modulus();
    let src = i.nf_table(d);
    let s = src.quotient_dim();
    if s == 0 {
        return vec![];
    }
    let targets: Vec<_> = jg.iter().map(|g| i.nf_table(d + g.degree().unwrap())).collect();
    let cols: usize = targets.iter().map(|t| t.quotient_dim()).sum();
    let mut m = Matrix::zeros(field, s, cols);
    for (r, &u) in src.standard().iter().enumerate() {
        let mut off = 0;
        for (g, t) in jg.iter().zip(&targets) {
            let mut acc = vec![0u32; t.quotient_dim()];
            for &(mono, c) in g.terms() {
                t.add_nf_of_monomial(&mut acc, mono.mul(u), c, p);
            }
            for (k, v) in acc.into_iter().enumerate() {
                m.set(r, off + k, v);
            }
            off += t.quotient_dim();
        }
    }
    m.left_kernel_basis().into_iter().map(|w| src.to_poly(ring, &w)).collect()
}

/// `A ∩ B` for homogeneous ideals, certified by `HS(A∩B) = HS(A) + HS(B) - HS(A+B)`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let ring = a.ring();
    ring.check(&b.ring())?;
    if !a.is_homogeneous() || !b.is_homogeneous() {
        return intersect_by_elimination(a, b);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let target = HilbertSeries::of(a).add(&HilbertSeries::of(b)).sub(&HilbertSeries::of(&a.sum(b)));
    build_certified(ring, &target, &[], |d| {
        let ta = a.nf_table(d);
        let tb = b.nf_table(d);
        let (sa, sb) = (ta.quotient_dim(), tb.quotient_dim());
        let monos = ta.monomials();
        let mut m = Matrix::zeros(ring.field, monos.len(), sa + sb);
        for (r, &u) in monos.iter().enumerate() {
            for (k, &v) in ta.nf_of_monomial(u).iter().enumerate() {
                m.set(r, k, v);
            }
            for (k, &v) in tb.nf_of_monomial(u).iter().enumerate() {
                m.set(r, sa + k, v);
            }
        }
        m.left_kernel_basis()
            .into_iter()
            .map(|w| MultiPoly::from_terms(ring, monos.iter().copied().zip(w).collect()))
            .collect()
    })?
    .ok_or_else(|| Error::Verification { claim: "intersection matches its Hilbert series".into() })
}

/// Grows an ideal degree by degree from `piece(d)` (a spanning set of its degree-`d` part)
/// until its Hilbert series equals `target`. Returns `None` if some piece is too small.
fn build_certified(
    ring: PolyRing,
    target: &HilbertSeries,
    seeds: &[MultiPoly],
    mut piece: impl FnMut(u32) -> Vec<MultiPoly>,
) -> Result<Option<Ideal>> {
    let n = ring.nvars as i64;
    let mut engine = Engine::new(ring, MonomialOrder::Degrevlex, true);
    engine.add_generators(seeds);
    let mut d = 0u32;
    loop {
        engine.run_through(d);
        let want = binomial(d as i64 + n - 1, n - 1) as i64 - target.value(d as i64);
        let mut have = count_in_degree(&engine.active_leads(), ring.nvars, d);
        if have < want {
            let extra = piece(d);
            engine.add_generators(&extra);
            engine.run_through(d);
            have = count_in_degree(&engine.active_leads(), ring.nvars, d);
        }
        if have != want {
            debug!("degree {d}: built {have}, target {want}");
            return Ok(None);
        }
        if engine.is_complete() {
            let leads = engine.active_leads();
            if HilbertSeries::of_monomial_ideal(ring.nvars, &leads) == *target {
                let basis = engine.reduced_basis();
                return Ok(Some(Ideal::from_basis(super::GroebnerBasis::from_reduced(
                    ring,
                    MonomialOrder::Degrevlex,
                    basis,
                ))));
            }
        }
        d += 1;
        if d > DEGREE_CAP {
            return Err(Error::Verification { claim: format!("certified construction within degree {DEGREE_CAP}") });
        }
    }
}

fn count_in_degree(leads: &[Monomial], nvars: usize, d: u32) -> i64 {
    let relevant: Vec<Monomial> = leads.iter().copied().filter(|l| l.degree() <= d).collect();
    if relevant.is_empty() {
        return 0;
    }
    monomials_of_degree(nvars, d)
        .into_iter()
        .filter(|&m| relevant.iter().any(|l| l.divides(m)))
        .count() as i64
}

/// `A ∩ B` as the elimination of `t` from `t A + (1 - t) B`.
pub fn intersect_by_elimination(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let ring = a.ring();
    ring.check(&b.ring())?;
    let big = PolyRing::new(ring.field, ring.nvars + 1)?;
    let t = big.var(ring.nvars);
    let one_minus_t = &big.one() - &t;
    let mut gens: Vec<MultiPoly> = a.gens().iter().map(|f| &f.embed(big) * &t).collect();
    gens.extend(b.gens().iter().map(|f| &f.embed(big) * &one_minus_t));
    elimination_ideal(&Ideal::new(big, gens), ring.nvars)
}

/// `(I : J)` as `∩_j (I ∩ (g_j)) / g_j` with tag-variable intersections.
pub fn quotient_by_elimination(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    let mut acc: Option<Ideal> = None;
    for g in nonzero_gens(j)? {
        let inter = intersect_by_elimination(i, &Ideal::new(ring, vec![g.clone()]))?;
        let gens = inter
            .gens()
            .iter()
            .map(|f| divide_exact(f, &g))
            .collect::<Result<Vec<_>>>()?;
        let q = Ideal::new(ring, gens);
        acc = Some(match acc {
            None => q,
            Some(a) => intersect_by_elimination(&a, &q)?,
        });
    }
    let out = acc.unwrap();
    Ok(Ideal::from_basis(out.gb().clone()))
}

/// Exact division `f / g`; errors if `g` does not divide `f`.
pub fn divide_exact(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    let ring = f.ring();
    let field = ring.field;
    let (lg, cg) = g.lead().ok_or(Error::DivisionByZero(field.modulus()))?;
    let inv = field.inv_nz(cg);
    let mut rem = f.clone();
    let mut q = Vec::new();
    while let Some((m, c)) = rem.lead() {
        let Some(mq) = lg.divide_into(m) else {
            return Err(Error::Verification { claim: "exact polynomial division".into() });
        };
        let cq = field.mul(c, inv);
        q.push((mq, cq));
        rem = rem.add_scaled(&g.mul_term(mq, cq), field.neg(1));
    }
    Ok(MultiPoly::from_terms(ring, q))
}

fn is_irrelevant(j: &Ideal) -> bool {
    let n = j.ring().nvars;
    let leads = j.gb().leads();
    leads.len() == n && (0..n).all(|i| leads.contains(&Monomial::var(i)))
}

/// `(I : J^∞)`.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    nonzero_gens(j)?;
    if i.is_homogeneous() && is_irrelevant(j) {
        return Ok(saturate_irrelevant(i));
    }
    let mut cur = i.clone();
    for _ in 0..SATURATION_CAP {
        let next = ideal_quotient(&cur, j)?;
        if next == cur {
            return Ok(next);
        }
        cur = next;
    }
    Err(Error::SaturationCap(SATURATION_CAP))
}

/// `(I : m^∞)` for the irrelevant ideal `m`, as `I : ℓ^∞` for a general linear form `ℓ`.
///
/// After a change of coordinates making `ℓ` the last variable, the degrevlex basis of
/// `I : x_n^∞` is the degrevlex basis of `I` with all powers of `x_n` divided out.
/// `ℓ` is drawn from a fixed stream, so the result is deterministic.
pub fn saturate_irrelevant(i: &Ideal) -> Ideal {
    let ring = i.ring();
    if i.is_zero() || i.is_unit() {
        return Ideal::from_basis(i.gb().clone());
    }
    let field = ring.field;
    let n = ring.nvars;
    let mut rng = rng::stream(0x5a7u64, "saturation-linear-form");
    let mut c = rng::residues(&mut rng, field, n);
    c[n - 1] = rng::nonzero_residue(&mut rng, field);
    // forward: x_{n-1} -> (x_{n-1} - sum_{i<n-1} c_i x_i) / c_{n-1}
    let inv = field.inv_nz(c[n - 1]);
    let mut fwd: Vec<MultiPoly> = (0..n).map(|k| ring.var(k)).collect();
    let mut row = vec![0u32; n];
    for k in 0..n - 1 {
        row[k] = field.neg(field.mul(c[k], inv));
    }
    row[n - 1] = inv;
    fwd[n - 1] = ring.linear_form(&row);
    let mut back: Vec<MultiPoly> = (0..n).map(|k| ring.var(k)).collect();
    back[n - 1] = ring.linear_form(&c);
    let moved: Vec<MultiPoly> = i.gb().elements().iter().map(|g| g.substitute(&fwd)).collect();
    let gb = buchberger(ring, &moved, MonomialOrder::Degrevlex);
    let last = n - 1;
    let divided: Vec<MultiPoly> = gb
        .elements()
        .iter()
        .map(|g| {
            let k = g.terms().iter().map(|t| t.0.exponent(last)).min().unwrap_or(0);
            if k == 0 {
                g.clone()
            } else {
                let q = Monomial::ONE.with_exponent(last, k);
                MultiPoly::from_terms(ring, g.terms().iter().map(|&(m, c)| (q.divide_into(m).unwrap(), c)).collect())
            }
        })
        .collect();
    let restored: Vec<MultiPoly> = divided.iter().map(|g| g.substitute(&back)).collect();
    Ideal::from_basis(buchberger(ring, &restored, MonomialOrder::Degrevlex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::poly::parse_poly;

    fn ring(n: usize) -> PolyRing {
        PolyRing::new(PrimeField::new(10007).unwrap(), n).unwrap()
    }

    fn ideal(r: PolyRing, s: &[&str]) -> Ideal {
        Ideal::new(r, s.iter().map(|x| parse_poly(r, x).unwrap()).collect())
    }

    #[test]
    fn monomial_quotients() {
        let r = ring(3);
        let q = ideal_quotient(&ideal(r, &["x0*x1", "x0*x2"]), &ideal(r, &["x0"])).unwrap();
        assert_eq!(q, ideal(r, &["x1", "x2"]));
        let q = ideal_quotient(&ideal(r, &["x0^2", "x0*x1"]), &ideal(r, &["x1"])).unwrap();
        assert_eq!(q, ideal(r, &["x0"]));
        assert_eq!(ideal_quotient(&ideal(r, &["x0"]), &Ideal::zero(r)), Err(Error::QuotientByZero));
    }

    #[test]
    fn quotient_routes_agree() {
        let r = ring(4);
        let i = ideal(r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
        let b = ideal(r, &["x0*x2 - x1^2", "x1*x3 - x2^2"]);
        // the two quadrics cut the twisted cubic plus the line x1 = x2 = 0
        let line = ideal_quotient(&b, &i).unwrap();
        assert_eq!(line, ideal(r, &["x1", "x2"]));
        assert_eq!(quotient_by_elimination(&b, &i).unwrap(), line);
        // and back
        assert_eq!(ideal_quotient(&b, &line).unwrap(), i);
    }

    #[test]
    fn saturation_examples() {
        let r = ring(2);
        let m = Ideal::irrelevant(r);
        let s = saturate(&ideal(r, &["x0^2", "x0*x1"]), &m).unwrap();
        assert_eq!(s, ideal(r, &["x0"]));
        let r3 = ring(3);
        let i = ideal(r3, &["x0^2", "x0*x1"]);
        let slow = saturate(&i, &ideal(r3, &["x0", "x1"])).unwrap();
        assert_eq!(slow, ideal(r3, &["x0"]));
        assert_eq!(saturate(&slow, &ideal(r3, &["x0", "x1"])).unwrap(), slow);
    }

    #[test]
    fn elimination_examples() {
        let r = ring(3);
        let e = elimination_ideal(&ideal(r, &["x2 - x0", "x2^2"]), 2).unwrap();
        assert!(e.contains(&parse_poly(e.ring(), "x0^2").unwrap()));
        let r4 = ring(4);
        let e = elimination_ideal(&ideal(r4, &["x3"]), 3).unwrap();
        assert!(e.is_zero() || e.gb().is_empty());
    }

    #[test]
    fn intersection_routes_agree() {
        let r = ring(3);
        let a = ideal(r, &["x0", "x1"]);
        let b = ideal(r, &["x1", "x2"]);
        let c = intersect(&a, &b).unwrap();
        assert_eq!(c, ideal(r, &["x1", "x0*x2"]));
        assert_eq!(intersect_by_elimination(&a, &b).unwrap(), c);
    }
}

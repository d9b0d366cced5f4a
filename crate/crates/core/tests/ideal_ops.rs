//! Invariants of the ideal operations on random homogeneous ideals.

use proptest::prelude::*;

use curvelink::algebra::PrimeField;
use curvelink::groebner::{
    ideal_quotient, intersect, intersect_by_elimination, quotient_by_elimination, saturate_irrelevant, Ideal,
};
use curvelink::hilbert::{hilbert_profile, HilbertSeries};
use curvelink::liaison::{link, LiaisonSpec, LinkOptions};
use curvelink::poly::{monomials_of_degree, parse_poly, MultiPoly, PolyRing};

fn ring(n: usize) -> PolyRing {
    PolyRing::new(PrimeField::new(10007).unwrap(), n).unwrap()
}

/// A homogeneous form of degree `d` with the given coefficients, cycled over the monomials.
fn form(r: PolyRing, d: u32, coeffs: &[u32]) -> MultiPoly {
    let monos = monomials_of_degree(r.nvars, d);
    MultiPoly::from_terms(r, monos.into_iter().zip(coeffs.iter().cycle()).map(|(m, &c)| (m, c)).collect())
}

fn arb_ideal(n: usize) -> impl Strategy<Value = Ideal> {
    prop::collection::vec((1u32..=2, prop::collection::vec(0u32..10007, 1..12)), 1..4).prop_map(move |gs| {
        let r = ring(n);
        Ideal::new(r, gs.iter().map(|(d, c)| form(r, *d, c)).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn basis_is_idempotent_and_contains_generators(i in arb_ideal(4)) {
        let again = Ideal::new(i.ring(), i.gb().elements().to_vec());
        prop_assert_eq!(again.gb().elements(), i.gb().elements());
        for g in i.gens() {
            prop_assert!(i.contains(g));
        }
    }

    #[test]
    fn quotient_contains_the_ideal_and_matches_elimination(i in arb_ideal(4), j in arb_ideal(4)) {
        let q = ideal_quotient(&i, &j).unwrap();
        prop_assert!(q.contains_ideal(&i));
        // (I : J) J ⊆ I
        prop_assert!(i.contains_ideal(&q.product(&j)));
        prop_assert_eq!(q, quotient_by_elimination(&i, &j).unwrap());
    }

    #[test]
    fn intersection_routes_agree(i in arb_ideal(3), j in arb_ideal(3)) {
        let a = intersect(&i, &j).unwrap();
        let b = intersect_by_elimination(&i, &j).unwrap();
        prop_assert!(i.contains_ideal(&a) && j.contains_ideal(&a));
        prop_assert!(a.contains_ideal(&i.product(&j)));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn saturation_keeps_the_hilbert_polynomial(i in arb_ideal(4)) {
        let s = saturate_irrelevant(&i);
        prop_assert!(s.contains_ideal(&i));
        let (a, b) = (HilbertSeries::of(&i), HilbertSeries::of(&s));
        prop_assert_eq!(a.projective_dim(), b.projective_dim());
        prop_assert_eq!(a.degree(), b.degree());
    }
}

fn rational_quartic() -> Ideal {
    // image of (s^4 : s^3 t : s t^3 : t^4)
    let r = ring(4);
    let p = |s: &str| parse_poly(r, s).unwrap();
    Ideal::new(r, vec![p("x0*x3 - x1*x2"), p("x1^3 - x0^2*x2"), p("x2^3 - x1*x3^2"), p("x0*x2^2 - x1^2*x3")])
}

#[test]
fn rational_quartic_is_linked_to_a_line_pair_and_back() {
    let c = rational_quartic();
    let prof = hilbert_profile(&c, None).unwrap();
    assert_eq!((prof.dim, prof.degree, prof.pa), (1, 4, 0));
    for seed in 0..3 {
        let spec = LiaisonSpec::new(3, "2,3".parse().unwrap(), 4, 0).unwrap();
        let res = link(&c, &spec, seed, LinkOptions { expect_smooth: false, count_nodes: true, check_symmetry: true }).unwrap();
        assert_eq!((res.numerics.d_prime, res.numerics.g_prime), (2, -1));
        assert_eq!((res.measured.profile.degree, res.measured.profile.pa), (2, -1), "seed {seed}");
        assert_eq!(res.measured.node_scheme.map(|(_, n)| n), Some(res.numerics.nodes));
        assert_eq!(res.measured.symmetric, Some(true));
    }
}

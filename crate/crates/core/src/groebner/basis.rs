use super::engine::{sparse_nf, Engine, Terms};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, PolyRing};

/// A reduced Gröbner basis: monic elements sorted by increasing leading monomial.
///
/// Reduced bases are unique, so two ideals are equal iff their bases compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    order: MonomialOrder,
    elements: Vec<MultiPoly>,
    leads: Vec<Monomial>,
    homogeneous: bool,
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(ring: PolyRing, order: MonomialOrder, elements: Vec<MultiPoly>) -> Self {
        let leads: Vec<Monomial> = elements.iter().map(|g| leading_monomial(g, order)).collect();
        let homogeneous = elements.iter().all(|g| g.is_homogeneous());
        GroebnerBasis {
            ring,
            order,
            elements,
            leads,
            homogeneous,
        }
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[MultiPoly] {
        &self.elements
    }

    pub fn leads(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// True for the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(|m| m.is_one())
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Whether `m` lies in the initial ideal.
    pub fn is_lead_multiple(&self, m: Monomial) -> bool {
        self.leads.iter().any(|l| l.divides(m))
    }

    fn sorted_terms(&self, f: &MultiPoly) -> Terms {
        let mut t = f.terms().to_vec();
        if self.order != MonomialOrder::Degrevlex {
            t.sort_by_key(|&(m, _)| std::cmp::Reverse(self.order.key(m)));
        }
        t
    }

    /// Remainder of multivariate division; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        assert_eq!(f.ring(), self.ring, "normal form across rings");
        let polys: Vec<Terms> = self.elements.iter().map(|g| self.sorted_terms(g)).collect();
        let reducers: Vec<usize> = (0..polys.len()).collect();
        let t = sparse_nf(&self.sorted_terms(f), &polys, &reducers, self.order, self.ring, false);
        MultiPoly::from_terms(self.ring, t)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks the Buchberger criterion directly: every S-polynomial reduces to zero.
    pub fn verify_s_pairs(&self) -> bool {
        let f = self.ring.field;
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let l = self.leads[i].lcm(self.leads[j]);
                let qi = self.leads[i].divide_into(l).unwrap();
                let qj = self.leads[j].divide_into(l).unwrap();
                let ci = lead_coefficient(&self.elements[i], self.leads[i]);
                let cj = lead_coefficient(&self.elements[j], self.leads[j]);
                let s = self.elements[i]
                    .mul_term(qi, cj)
                    .add_scaled(&self.elements[j].mul_term(qj, 1), f.neg(ci));
                if !self.contains(&s) {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn leading_monomial(g: &MultiPoly, order: MonomialOrder) -> Monomial {
    match order {
        MonomialOrder::Degrevlex => g.lead().expect("zero basis element").0,
        _ => g.terms().iter().map(|t| t.0).max_by_key(|&m| order.key(m)).expect("zero basis element"),
    }
}

fn lead_coefficient(g: &MultiPoly, m: Monomial) -> u32 {
    g.coefficient(m)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(ring: PolyRing, gens: &[MultiPoly], order: MonomialOrder) -> GroebnerBasis {
    let homogeneous = gens.iter().all(|g| g.is_homogeneous());
    let mut e = Engine::new(ring, order, homogeneous);
    e.add_generators(gens);
    e.run_to_completion();
    GroebnerBasis::from_reduced(ring, order, e.reduced_basis())
}

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::FxHashMap;

use super::basis::{buchberger, GroebnerBasis};
use super::engine::Engine;
use super::nf_table::NormalFormTable;
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, MultiPoly, PolyRing};

/// An ideal given by generators, with its degrevlex basis and normal-form tables computed
/// on first use and cached.
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<MultiPoly>,
    gb: OnceLock<Arc<GroebnerBasis>>,
    tables: Mutex<FxHashMap<u32, Arc<NormalFormTable>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            ring: self.ring,
            gens: self.gens.clone(),
            gb,
            tables: Mutex::new(self.tables.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal").field("nvars", &self.ring.nvars).field("gens", &self.gens).finish()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb() == other.gb()
    }
}

impl Eq for Ideal {}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: PolyRing, gens: Vec<MultiPoly>) -> Self {
        for g in &gens {
            assert_eq!(g.ring(), ring, "generator from a different ring");
        }
        Ideal {
            ring,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
            tables: Mutex::new(FxHashMap::default()),
        }
    }

    /// An ideal whose generators are already a reduced degrevlex basis.
    pub fn from_basis(gb: GroebnerBasis) -> Self {
        assert_eq!(gb.order(), MonomialOrder::Degrevlex);
        let ideal = Ideal::new(gb.ring(), gb.elements().to_vec());
        let _ = ideal.gb.set(Arc::new(gb));
        ideal
    }

    pub fn zero(ring: PolyRing) -> Self {
        Ideal::new(ring, vec![])
    }

    pub fn unit(ring: PolyRing) -> Self {
        Ideal::new(ring, vec![ring.one()])
    }

    /// The irrelevant ideal (x_0, ..., x_n).
    pub fn irrelevant(ring: PolyRing) -> Self {
        Ideal::new(ring, (0..ring.nvars).map(|i| ring.var(i)).collect())
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn gens(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| Arc::new(buchberger(self.ring, &self.gens, MonomialOrder::Degrevlex)))
    }

    pub fn gb_arc(&self) -> Arc<GroebnerBasis> {
        self.gb();
        self.gb.get().unwrap().clone()
    }

    pub fn gb_with(&self, order: MonomialOrder) -> GroebnerBasis {
        if order == MonomialOrder::Degrevlex {
            return self.gb().clone();
        }
        buchberger(self.ring, &self.gens, order)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.gb().contains(f)
    }

    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        self.gb().normal_form(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(self.ring, g)
    }

    pub fn with(&self, extra: &[MultiPoly]) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(extra.iter().cloned());
        Ideal::new(self.ring, g)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        Ideal::new(self.ring, g)
    }

    /// Cached normal-form table of the degree-`d` piece (homogeneous ideals).
    pub fn nf_table(&self, d: u32) -> Arc<NormalFormTable> {
        if let Some(t) = self.tables.lock().unwrap().get(&d) {
            return t.clone();
        }
        let t = Arc::new(NormalFormTable::build(self.gb(), d));
        self.tables.lock().unwrap().insert(d, t.clone());
        t
    }

    /// `dim_k I_d`, read off the initial ideal.
    pub fn dim_in_degree(&self, d: u32) -> usize {
        let gb = self.gb();
        monomials_of_degree(self.ring.nvars, d)
            .into_iter()
            .filter(|&m| gb.is_lead_multiple(m))
            .count()
    }

    /// A basis of `I_d`: `u - NF(u)` for every non-standard monomial `u` of degree `d`.
    pub fn basis_in_degree(&self, d: u32) -> Vec<MultiPoly> {
        let t = self.nf_table(d);
        let field = self.ring.field;
        t.monomials()
            .iter()
            .filter(|&&m| !t.is_standard(m))
            .map(|&m| {
                let nf = t.to_poly(self.ring, t.nf_of_monomial(m));
                MultiPoly::monomial(self.ring, m, 1).add_scaled(&nf, field.neg(1))
            })
            .collect()
    }

    /// A minimal homogeneous generating set, chosen among the reduced basis elements in order
    /// of degree: an element is kept unless it lies in the ideal of those kept before it.
    pub fn minimal_generators(&self) -> Vec<MultiPoly> {
        let gb = self.gb();
        if gb.is_unit() || !gb.is_homogeneous() {
            return gb.elements().to_vec();
        }
        let mut by_degree: Vec<&MultiPoly> = gb.elements().iter().collect();
        by_degree.sort_by_key(|g| g.degree());
        let mut engine = Engine::new(self.ring, MonomialOrder::Degrevlex, true);
        let mut kept = Vec::new();
        for g in by_degree {
            engine.run_through(g.degree().unwrap_or(0));
            if !engine.normal_form(g).is_zero() {
                engine.add_generators(std::slice::from_ref(g));
                kept.push(g.clone());
            }
        }
        kept
    }

    /// Leading monomials of the degrevlex basis.
    pub fn initial_ideal(&self) -> Vec<Monomial> {
        self.gb().leads().to_vec()
    }
}

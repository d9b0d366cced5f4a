use rustc_hash::FxHashMap;

use super::basis::GroebnerBasis;
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, MultiPoly};

const NOT_STANDARD: u32 = u32::MAX;

/// Normal forms of every monomial of one degree modulo a homogeneous ideal.
///
/// Row `i` holds the coordinates of `NF(monos[i])` in the basis `standard` of `(R/I)_d`.
/// This is the linear-algebra view of the quotient ring used by kernels, intersections
/// and multiplication matrices.
#[derive(Debug)]
pub struct NormalFormTable {
    degree: u32,
    monos: Vec<Monomial>,
    index: FxHashMap<Monomial, u32>,
    standard: Vec<Monomial>,
    std_pos: Vec<u32>,
    nf: Vec<u32>,
}

impl NormalFormTable {
    pub fn build(gb: &GroebnerBasis, d: u32) -> Self {
        assert_eq!(gb.order(), MonomialOrder::Degrevlex);
        assert!(gb.is_homogeneous(), "normal-form tables need a homogeneous ideal");
        let field = gb.ring().field;
        let p = field.modulus() as u64;
        let monos = monomials_of_degree(gb.ring().nvars, d);
        let index: FxHashMap<Monomial, u32> = monos.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
        let mut std_pos = vec![NOT_STANDARD; monos.len()];
        let mut standard = Vec::new();
        for (i, &m) in monos.iter().enumerate() {
            if !gb.is_lead_multiple(m) {
                std_pos[i] = standard.len() as u32;
                standard.push(m);
            }
        }
        let s = standard.len();
        let mut nf = vec![0u32; monos.len() * s];
        if s > 0 {
            // ascending order: every tail monomial is already done
            for i in (0..monos.len()).rev() {
                let u = monos[i];
                if std_pos[i] != NOT_STANDARD {
                    nf[i * s + std_pos[i] as usize] = 1;
                    continue;
                }
                let (g, q) = gb
                    .elements()
                    .iter()
                    .zip(gb.leads())
                    .filter_map(|(g, l)| l.divide_into(u).map(|q| (g, q)))
                    .min_by_key(|(g, _)| g.len())
                    .expect("non-standard monomial has a reducer");
                let mut acc = vec![0u64; s];
                for &(t, c) in &g.terms()[1..] {
                    let j = index[&t.mul(q)] as usize;
                    let neg = p - c as u64;
                    let src = &nf[j * s..(j + 1) * s];
                    for (a, &b) in acc.iter_mut().zip(src) {
                        if b != 0 {
                            *a = (*a + neg * b as u64) % p;
                        }
                    }
                }
                for (k, a) in acc.into_iter().enumerate() {
                    nf[i * s + k] = a as u32;
                }
            }
        }
        NormalFormTable {
            degree: d,
            monos,
            index,
            standard,
            std_pos,
            nf,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    /// Standard monomials of this degree, a basis of `(R/I)_d`.
    pub fn standard(&self) -> &[Monomial] {
        &self.standard
    }

    pub fn quotient_dim(&self) -> usize {
        self.standard.len()
    }

    pub fn index_of(&self, m: Monomial) -> Option<usize> {
        self.index.get(&m).map(|&i| i as usize)
    }

    pub fn is_standard(&self, m: Monomial) -> bool {
        self.index_of(m).is_some_and(|i| self.std_pos[i] != NOT_STANDARD)
    }

    pub fn nf_of_monomial(&self, m: Monomial) -> &[u32] {
        let i = self.index[&m] as usize;
        let s = self.standard.len();
        &self.nf[i * s..(i + 1) * s]
    }

    /// Normal form of a form of this degree, as coordinates over the standard monomials.
    pub fn nf_vector(&self, f: &MultiPoly) -> Vec<u32> {
        let field = f.field();
        let p = field.modulus() as u64;
        let mut acc = vec![0u64; self.standard.len()];
        for &(m, c) in f.terms() {
            debug_assert_eq!(m.degree(), self.degree);
            for (a, &b) in acc.iter_mut().zip(self.nf_of_monomial(m)) {
                if b != 0 {
                    *a = (*a + c as u64 * b as u64) % p;
                }
            }
        }
        acc.into_iter().map(|a| a as u32).collect()
    }

    /// Accumulates `c * NF(m)` into `acc` (entries kept below `p`).
    pub fn add_nf_of_monomial(&self, acc: &mut [u32], m: Monomial, c: u32, p: u32) {
        let p = p as u64;
        for (a, &b) in acc.iter_mut().zip(self.nf_of_monomial(m)) {
            if b != 0 {
                *a = ((*a as u64 + c as u64 * b as u64) % p) as u32;
            }
        }
    }

    /// Turns a coordinate vector back into a polynomial.
    pub fn to_poly(&self, ring: crate::poly::PolyRing, v: &[u32]) -> MultiPoly {
        MultiPoly::from_terms(ring, self.standard.iter().copied().zip(v.iter().copied()).collect())
    }
}

//! Buchberger's algorithm.
//!
//! Homogeneous input runs degree by degree: every S-polynomial of degree `d` is reduced as a
//! dense vector over the monomials of degree `d`, with one lazily built reducer row per
//! monomial. That makes each degree a single pass of Gaussian elimination. Other input goes
//! through a sparse sugar-strategy loop. Both use the Gebauer–Möller pair update.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, MultiPoly, PolyRing, SortKey};

pub(crate) type Terms = Vec<(Monomial, u32)>;

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: u32,
    j: u32,
    lcm: Monomial,
    sugar: u32,
}

const UNKNOWN: u32 = u32::MAX;
const NONE: u32 = u32::MAX - 1;

/// Monomials of one degree, indexed in descending order, with cached reducer rows.
pub(crate) struct DegreeSpace {
    pub monos: Vec<Monomial>,
    pub index: FxHashMap<Monomial, u32>,
    reducer: Vec<u32>,
    rows: Vec<Vec<(u32, u32)>>,
}

impl DegreeSpace {
    pub fn new(nvars: usize, d: u32, order: MonomialOrder) -> Self {
        let mut monos = monomials_of_degree(nvars, d);
        if order != MonomialOrder::Degrevlex {
            monos.sort_by_key(|&m| std::cmp::Reverse(order.key(m)));
        }
        let index = monos.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
        let n = monos.len();
        DegreeSpace {
            monos,
            index,
            reducer: vec![UNKNOWN; n],
            rows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    /// Dense row of `m * poly` (poly monic, terms in the space's order).
    pub fn shifted_row(&self, m: Monomial, poly: &[(Monomial, u32)]) -> Vec<(u32, u32)> {
        poly.iter().map(|&(t, c)| (self.index[&t.mul(m)], c)).collect()
    }

    pub fn set_reducer(&mut self, idx: usize, row: Vec<(u32, u32)>) {
        self.reducer[idx] = self.rows.len() as u32;
        self.rows.push(row);
    }

    fn reducer_row(&mut self, idx: usize, polys: &[Terms], candidates: &[usize]) -> Option<u32> {
        match self.reducer[idx] {
            NONE => return None,
            UNKNOWN => {}
            r => return Some(r),
        }
        let u = self.monos[idx];
        let mut best: Option<(usize, Monomial)> = None;
        for &g in candidates {
            let lt = polys[g][0].0;
            if let Some(q) = lt.divide_into(u) {
                if best.is_none_or(|(b, _)| polys[g].len() < polys[b].len()) {
                    best = Some((g, q));
                }
            }
        }
        match best {
            None => {
                self.reducer[idx] = NONE;
                None
            }
            Some((g, q)) => {
                let row = self.shifted_row(q, &polys[g]);
                self.set_reducer(idx, row);
                Some(self.reducer[idx])
            }
        }
    }

    /// Fully reduces the dense vector `v` from position `start` on.
    pub fn reduce(&mut self, v: &mut [u32], start: usize, p: u32, polys: &[Terms], candidates: &[usize]) {
        let pp = p as u64;
        for i in start..v.len() {
            let c = v[i];
            if c == 0 {
                continue;
            }
            if let Some(r) = self.reducer_row(i, polys, candidates) {
                let neg = pp - c as u64;
                for &(j, a) in &self.rows[r as usize] {
                    let j = j as usize;
                    v[j] = ((v[j] as u64 + neg * a as u64) % pp) as u32;
                }
                debug_assert_eq!(v[i], 0);
            }
        }
    }

    /// Reads a dense vector back as sorted terms, made monic. Returns `None` for zero.
    pub fn to_monic_terms(&self, v: &[u32], field: crate::algebra::PrimeField) -> Option<Terms> {
        let first = v.iter().position(|&c| c != 0)?;
        let inv = field.inv_nz(v[first]);
        Some(
            v.iter()
                .enumerate()
                .skip(first)
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (self.monos[i], field.mul(c, inv)))
                .collect(),
        )
    }
}

/// Incremental Buchberger engine. Homogeneous engines may be resumed: generators can be
/// added between calls to [`Engine::run_through`], and the basis is exact in every degree
/// up to the last one processed.
pub(crate) struct Engine {
    ring: PolyRing,
    order: MonomialOrder,
    homogeneous: bool,
    polys: Vec<Terms>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    pending: BTreeMap<u32, Vec<Terms>>,
}

impl Engine {
    pub fn new(ring: PolyRing, order: MonomialOrder, homogeneous: bool) -> Self {
        Engine {
            ring,
            order,
            homogeneous,
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            pending: BTreeMap::new(),
        }
    }

    fn sort_terms(&self, f: &MultiPoly) -> Terms {
        let mut t = f.terms().to_vec();
        if self.order != MonomialOrder::Degrevlex {
            t.sort_by_key(|&(m, _)| std::cmp::Reverse(self.order.key(m)));
        }
        t
    }

    pub fn add_generators(&mut self, gens: &[MultiPoly]) {
        for g in gens {
            if g.is_zero() {
                continue;
            }
            debug_assert!(!self.homogeneous || g.is_homogeneous());
            let t = self.sort_terms(g);
            let deg = g.terms().iter().map(|t| t.0.degree()).max().unwrap();
            self.pending.entry(deg).or_default().push(t);
        }
    }

    pub fn is_complete(&self) -> bool {
        self.pairs.is_empty() && self.pending.is_empty()
    }

    /// Lowest degree with outstanding work.
    pub fn next_degree(&self) -> Option<u32> {
        let p = self.pairs.iter().map(|p| p.sugar).min();
        let g = self.pending.keys().next().copied();
        match (p, g) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn active_leads(&self) -> Vec<Monomial> {
        self.active_indices().map(|i| self.polys[i][0].0).collect()
    }

    fn active_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.polys.len()).filter(|&i| self.active[i])
    }

    pub fn run_to_completion(&mut self) {
        if self.homogeneous {
            self.run_through(u32::MAX);
        } else {
            self.run_sparse();
        }
    }

    /// Processes all work in degrees `<= d` (homogeneous engines only).
    pub fn run_through(&mut self, d: u32) {
        assert!(self.homogeneous);
        while let Some(e) = self.next_degree() {
            if e > d {
                break;
            }
            self.process_degree(e);
        }
    }

    fn candidates(&self, d: u32) -> Vec<usize> {
        // active first so they win ties on length
        let mut c: Vec<usize> = self.active_indices().filter(|&i| self.polys[i][0].0.degree() <= d).collect();
        c.extend((0..self.polys.len()).filter(|&i| !self.active[i] && self.polys[i][0].0.degree() <= d));
        c
    }

    fn process_degree(&mut self, d: u32) {
        let field = self.ring.field;
        let p = field.modulus();
        let mut todo: Vec<Pair> = Vec::new();
        self.pairs.retain(|pr| {
            if pr.sugar == d {
                todo.push(*pr);
                false
            } else {
                true
            }
        });
        let order = self.order;
        todo.sort_by_key(|pr| (std::cmp::Reverse(order.key(pr.lcm)), pr.i, pr.j));
        let gens = self.pending.remove(&d).unwrap_or_default();
        let mut space = DegreeSpace::new(self.ring.nvars, d, self.order);
        let mut cands = self.candidates(d);
        let n = space.len();
        let mut v = vec![0u32; n];

        let mut inputs: Vec<Vec<(u32, u32)>> = Vec::with_capacity(todo.len() + gens.len());
        for pr in &todo {
            let (gi, gj) = (&self.polys[pr.i as usize], &self.polys[pr.j as usize]);
            let qi = gi[0].0.divide_into(pr.lcm).unwrap();
            let qj = gj[0].0.divide_into(pr.lcm).unwrap();
            let mut row = space.shifted_row(qi, gi);
            row.extend(space.shifted_row(qj, gj).into_iter().map(|(j, c)| (j, field.neg(c))));
            inputs.push(row);
        }
        for g in &gens {
            inputs.push(space.shifted_row(Monomial::ONE, g));
        }
        for row in inputs {
            let mut start = usize::MAX;
            for (j, c) in row {
                let j = j as usize;
                v[j] = field.add(v[j], c);
                start = start.min(j);
            }
            space.reduce(&mut v, start, p, &self.polys, &cands);
            if let Some(terms) = space.to_monic_terms(&v, field) {
                let lead_idx = space.index[&terms[0].0] as usize;
                let row = space.shifted_row(Monomial::ONE, &terms);
                space.set_reducer(lead_idx, row);
                let k = self.push(terms, d);
                cands.insert(0, k);
                self.update(k);
            }
            v.iter_mut().for_each(|x| *x = 0);
        }
    }

    fn push(&mut self, terms: Terms, sugar: u32) -> usize {
        self.polys.push(terms);
        self.sugar.push(sugar);
        self.active.push(false);
        self.polys.len() - 1
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: Monomial) -> u32 {
        if self.homogeneous {
            return lcm.degree();
        }
        let li = self.polys[i][0].0;
        let lj = self.polys[j][0].0;
        (self.sugar[i] + lcm.degree() - li.degree()).max(self.sugar[j] + lcm.degree() - lj.degree())
    }

    /// Gebauer–Möller update for the new element `k`.
    fn update(&mut self, k: usize) {
        let hk = self.polys[k][0].0;
        let cands: Vec<(usize, Monomial)> = self
            .active_indices()
            .filter(|&g| g != k)
            .map(|g| (g, hk.lcm(self.polys[g][0].0)))
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, &(g, l)) in cands.iter().enumerate() {
            let coprime = hk.is_coprime(self.polys[g][0].0);
            let dominated = !coprime
                && (cands[idx + 1..].iter().any(|&(_, l2)| l2.divides(l))
                    || kept.iter().any(|&(_, l2, _)| l2.divides(l)));
            if !dominated {
                kept.push((g, l, coprime));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|pr| {
            let li = polys[pr.i as usize][0].0;
            let lj = polys[pr.j as usize][0].0;
            !(hk.divides(pr.lcm) && li.lcm(hk) != pr.lcm && lj.lcm(hk) != pr.lcm)
        });
        for (g, l, coprime) in kept {
            if !coprime {
                let s = self.pair_sugar(g, k, l);
                self.pairs.push(Pair {
                    i: g as u32,
                    j: k as u32,
                    lcm: l,
                    sugar: s,
                });
            }
        }
        for g in 0..self.polys.len() {
            if self.active[g] && hk.divides(self.polys[g][0].0) {
                self.active[g] = false;
            }
        }
        self.active[k] = true;
    }

    fn run_sparse(&mut self) {
        let pending = std::mem::take(&mut self.pending);
        let mut gens: Vec<Terms> = pending.into_values().flatten().collect();
        gens.sort_by_key(|t| std::cmp::Reverse(self.order.key(t[0].0)));
        gens.reverse();
        for g in gens {
            let sug = g.iter().map(|t| t.0.degree()).max().unwrap();
            let r = self.sparse_reduce(g, false);
            if !r.is_empty() {
                let k = self.push(monic(r, self.ring), sug);
                self.update(k);
            }
        }
        let order = self.order;
        while !self.pairs.is_empty() {
            let best = (0..self.pairs.len())
                .min_by_key(|&i| {
                    let p = &self.pairs[i];
                    (p.sugar, order.key(p.lcm), p.i, p.j)
                })
                .unwrap();
            let pr = self.pairs.swap_remove(best);
            let s = self.spoly(pr);
            let r = self.sparse_reduce(s, false);
            if !r.is_empty() {
                let k = self.push(monic(r, self.ring), pr.sugar);
                self.update(k);
            }
        }
    }

    fn spoly(&self, pr: Pair) -> Terms {
        let f = self.ring.field;
        let (gi, gj) = (&self.polys[pr.i as usize], &self.polys[pr.j as usize]);
        let qi = gi[0].0.divide_into(pr.lcm).unwrap();
        let qj = gj[0].0.divide_into(pr.lcm).unwrap();
        let mut acc: BTreeMap<SortKey, (Monomial, u32)> = BTreeMap::new();
        for &(t, c) in &gi[1..] {
            add_term(&mut acc, self.order, t.mul(qi), c, f);
        }
        for &(t, c) in &gj[1..] {
            add_term(&mut acc, self.order, t.mul(qj), f.neg(c), f);
        }
        acc.into_values().rev().collect()
    }

    /// Normal form against every element computed so far (exact through the processed degrees).
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        let t = self.sort_terms(f);
        MultiPoly::from_terms(self.ring, self.sparse_reduce(t, false))
    }

    /// Full sparse reduction against all elements; `skip_lead` keeps the leading term.
    fn sparse_reduce(&self, f: Terms, skip_lead: bool) -> Terms {
        let reducers: Vec<usize> = (0..self.polys.len()).collect();
        sparse_nf(&f, &self.polys, &reducers, self.order, self.ring, skip_lead)
    }

    /// Minimal reduced basis, as monic polynomials sorted by increasing leading monomial.
    pub fn reduced_basis(&self) -> Vec<MultiPoly> {
        let mut minimal: Vec<usize> = self.active_indices().collect();
        minimal.sort_by_key(|&i| self.order.key(self.polys[i][0].0));
        let mut out_terms: Vec<Terms> = Vec::with_capacity(minimal.len());
        if self.homogeneous {
            let mut by_deg: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
            for &i in &minimal {
                by_deg.entry(self.polys[i][0].0.degree()).or_default().push(i);
            }
            let field = self.ring.field;
            let mut reduced: FxHashMap<usize, Terms> = FxHashMap::default();
            for (&d, members) in &by_deg {
                let mut space = DegreeSpace::new(self.ring.nvars, d, self.order);
                let cands: Vec<usize> = minimal.iter().copied().filter(|&i| self.polys[i][0].0.degree() <= d).collect();
                let mut v = vec![0u32; space.len()];
                for &i in members {
                    let row = space.shifted_row(Monomial::ONE, &self.polys[i]);
                    let lead = row[0].0 as usize;
                    for &(j, c) in &row {
                        v[j as usize] = c;
                    }
                    space.reduce(&mut v, lead + 1, field.modulus(), &self.polys, &cands);
                    reduced.insert(i, space.to_monic_terms(&v, field).unwrap());
                    v.iter_mut().for_each(|x| *x = 0);
                }
            }
            for i in &minimal {
                out_terms.push(reduced.remove(i).unwrap());
            }
        } else {
            for &i in &minimal {
                let others: Vec<usize> = minimal.iter().copied().filter(|&j| j != i).collect();
                out_terms.push(sparse_nf(&self.polys[i], &self.polys, &others, self.order, self.ring, true));
            }
        }
        out_terms.into_iter().map(|t| MultiPoly::from_terms(self.ring, t)).collect()
    }
}

fn monic(t: Terms, ring: PolyRing) -> Terms {
    let f = ring.field;
    let inv = f.inv_nz(t[0].1);
    t.into_iter().map(|(m, c)| (m, f.mul(c, inv))).collect()
}

fn add_term(acc: &mut BTreeMap<SortKey, (Monomial, u32)>, order: MonomialOrder, m: Monomial, c: u32, f: crate::algebra::PrimeField) {
    let k = order.key(m);
    match acc.get_mut(&k) {
        Some(e) => {
            e.1 = f.add(e.1, c);
            if e.1 == 0 {
                acc.remove(&k);
            }
        }
        None => {
            if c != 0 {
                acc.insert(k, (m, c));
            }
        }
    }
}

/// Sparse normal form of `f` (terms sorted descending in `order`) with respect to `polys[reducers]`.
pub(crate) fn sparse_nf(
    f: &[(Monomial, u32)],
    polys: &[Terms],
    reducers: &[usize],
    order: MonomialOrder,
    ring: PolyRing,
    skip_lead: bool,
) -> Terms {
    let field = ring.field;
    let mut acc: BTreeMap<SortKey, (Monomial, u32)> = BTreeMap::new();
    let mut out: Terms = Vec::new();
    let mut iter = f.iter();
    if skip_lead {
        if let Some(&t) = iter.next() {
            out.push(t);
        }
    }
    for &(m, c) in iter {
        add_term(&mut acc, order, m, c, field);
    }
    while let Some((_, (m, c))) = acc.pop_last() {
        let hit = reducers
            .iter()
            .filter_map(|&g| polys[g][0].0.divide_into(m).map(|q| (g, q)))
            .min_by_key(|&(g, _)| polys[g].len());
        match hit {
            None => out.push((m, c)),
            Some((g, q)) => {
                let lc = polys[g][0].1;
                let factor = field.neg(field.mul(c, field.inv_nz(lc)));
                for &(t, a) in &polys[g][1..] {
                    add_term(&mut acc, order, t.mul(q), field.mul(a, factor), field);
                }
            }
        }
    }
    out
}

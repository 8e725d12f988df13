//! Buchberger's algorithm for submodules of `R^k`.

use std::collections::HashMap;
use std::sync::Arc;

use super::vector::{merge_sub, reduce_full, reduce_with, ModuleOrder, SVec, Term};
use super::ModuleElement;
use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, Ring};

/// Tuning switches for [`buchberger_with`]. The reduced basis does not depend
/// on them.
#[derive(Clone, Copy, Debug)]
pub struct BuchbergerOptions {
    /// Gebauer–Möller chain criterion, plus the product criterion for ideals.
    pub criteria: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions { criteria: true }
    }
}

/// Reduced Gröbner basis of a submodule of `R^k`.
///
/// Generators are scaled to coprime integer coefficients with positive
/// leading coefficient and sorted by leading module term, descending. Two
/// `Submodule`s compare equal iff their reduced bases are identical, which
/// for a common order means the modules are equal.
#[derive(Clone, Debug)]
pub struct Submodule {
    ring: Arc<Ring>,
    rank: usize,
    order: ModuleOrder,
    gens: Vec<ModuleElement>,
    monic: Vec<SVec>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring)
            && self.rank == other.rank
            && self.order == other.order
            && self.gens == other.gens
    }
}

impl Eq for Submodule {}

impl Submodule {
    /// Submodule generated by `gens` under the default POT order.
    pub fn generate(ring: &Arc<Ring>, rank: usize, gens: &[ModuleElement]) -> Result<Submodule> {
        buchberger(ring, rank, gens, ModuleOrder::pot(ring.order()))
    }

    pub fn zero(ring: &Arc<Ring>, rank: usize) -> Submodule {
        Self::from_monic(ring, rank, ModuleOrder::pot(ring.order()), Vec::new())
    }

    pub fn full(ring: &Arc<Ring>, rank: usize) -> Submodule {
        let units: Vec<ModuleElement> = (0..rank).map(|i| ModuleElement::unit(ring, rank, i)).collect();
        Self::generate(ring, rank, &units).expect("unit vectors share the ring")
    }

    /// Wraps vectors that already form a reduced monic basis.
    pub(crate) fn from_monic(ring: &Arc<Ring>, rank: usize, order: ModuleOrder, mut monic: Vec<SVec>) -> Submodule {
        monic.sort_by(|a, b| order.cmp_terms(&b.terms[0], &a.terms[0]));
        let gens = monic
            .iter()
            .map(|v| {
                let mut p = v.clone();
                p.make_primitive();
                p.to_element(ring, rank)
            })
            .collect();
        Submodule { ring: ring.clone(), rank, order, gens, monic }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// The zero submodule.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// `true` iff the submodule is all of `R^k`.
    pub fn is_full(&self) -> bool {
        (0..self.rank).all(|c| self.monic.iter().any(|v| v.terms[0].comp == c && v.terms[0].mono.is_one()))
    }

    fn check(&self, v: &ModuleElement) -> Result<()> {
        if !same_ring(&self.ring, v.ring()) {
            return Err(Error::RingMismatch);
        }
        if v.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: v.rank() });
        }
        Ok(())
    }

    /// Remainder of `v` on division by the basis; unique for a fixed order.
    pub fn normal_form(&self, v: &ModuleElement) -> Result<ModuleElement> {
        self.check(v)?;
        let sv = SVec::from_element(v, &self.order);
        let active: Vec<usize> = (0..self.monic.len()).collect();
        Ok(reduce_full(sv, &self.monic, &active, &self.order).to_element(&self.ring, self.rank))
    }

    pub fn contains(&self, v: &ModuleElement) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// `true` iff every generator of `other` lies in `self`.
    pub fn contains_module(&self, other: &Submodule) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Normal form of `v` with respect to `gb`.
pub fn normal_form(v: &ModuleElement, gb: &Submodule) -> Result<ModuleElement> {
    gb.normal_form(v)
}

/// Submodule membership test.
pub fn member(v: &ModuleElement, gb: &Submodule) -> Result<bool> {
    gb.contains(v)
}

/// Reduced Gröbner basis of the submodule of `R^rank` generated by `gens`.
pub fn buchberger(ring: &Arc<Ring>, rank: usize, gens: &[ModuleElement], order: ModuleOrder) -> Result<Submodule> {
    buchberger_with(ring, rank, gens, order, BuchbergerOptions::default())
}

pub fn buchberger_with(
    ring: &Arc<Ring>,
    rank: usize,
    gens: &[ModuleElement],
    order: ModuleOrder,
    opts: BuchbergerOptions,
) -> Result<Submodule> {
    for g in gens {
        if !same_ring(ring, g.ring()) {
            return Err(Error::RingMismatch);
        }
        if g.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, found: g.rank() });
        }
    }
    let input = gens.iter().map(|g| SVec::from_element(g, &order)).collect();
    let basis = groebner(input, order, rank == 1, opts);
    Ok(Submodule::from_monic(ring, rank, order, basis))
}

/// Linearly independent monic vectors spanning the same `Q`-space.
fn linear_basis(vs: Vec<SVec>, order: &ModuleOrder) -> Vec<SVec> {
    let mut rows: Vec<SVec> = Vec::new();
    let mut pivots: HashMap<(usize, Monomial), usize> = HashMap::new();
    for v in vs {
        let one_var = v.terms.first().map(|t| t.mono.arity()).unwrap_or(0);
        let unit = Monomial::one(one_var);
        let mut r = reduce_with(v, &rows, order, |t| pivots.get(&(t.comp, t.mono.clone())).map(|&i| (i, unit.clone())));
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        let lead = &r.terms[0];
        pivots.insert((lead.comp, lead.mono.clone()), rows.len());
        rows.push(r);
    }
    rows
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    order: ModuleOrder,
    ideal: bool,
    criteria: bool,
    polys: Vec<SVec>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn lead(&self, i: usize) -> &Term {
        &self.polys[i].terms[0]
    }

    fn add(&mut self, h: SVec) {
        let hidx = self.polys.len();
        self.polys.push(h);
        let (hc, hm) = {
            let t = self.lead(hidx);
            (t.comp, t.mono.clone())
        };
        let cands: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .filter(|&&g| self.lead(g).comp == hc)
            .map(|&g| {
                let gm = &self.lead(g).mono;
                (g, gm.lcm(&hm), gm.is_coprime(&hm))
            })
            .collect();

        if !self.criteria {
            for (g, lcm, _) in cands {
                self.pairs.push(Pair { i: g, j: hidx, lcm });
            }
            self.active.push(hidx);
            return;
        }

        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, cand) in cands.iter().enumerate() {
            let (_, ref lcm, coprime) = *cand;
            if self.ideal && coprime {
                kept.push(cand.clone());
                continue;
            }
            let dominated = cands[idx + 1..].iter().any(|c| c.1.divides(lcm)) || kept.iter().any(|c| c.1.divides(lcm));
            if !dominated {
                kept.push(cand.clone());
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let pl = &polys[p.i].terms[0];
            if pl.comp != hc || !hm.divides(&p.lcm) {
                return true;
            }
            let li = pl.mono.lcm(&hm);
            let lj = polys[p.j].terms[0].mono.lcm(&hm);
            li == p.lcm || lj == p.lcm
        });
        for (g, lcm, coprime) in kept {
            if self.ideal && coprime {
                continue;
            }
            self.pairs.push(Pair { i: g, j: hidx, lcm });
        }
        let polys = &self.polys;
        self.active.retain(|&g| {
            let gl = &polys[g].terms[0];
            !(gl.comp == hc && hm.divides(&gl.mono))
        });
        self.active.push(hidx);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let best = self.pairs.iter().enumerate().min_by_key(|(_, p)| (p.lcm.degree(), p.i, p.j)).map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> SVec {
        let f = &self.polys[p.i];
        let g = &self.polys[p.j];
        let qf = f.terms[0].mono.quotient_of(&p.lcm).expect("lcm divisible");
        let qg = g.terms[0].mono.quotient_of(&p.lcm).expect("lcm divisible");
        // both monic: S = qf*f - qg*g, leading terms cancel
        let a = f.mul_term(&num_traits::One::one(), &qf);
        let terms = merge_sub(a.terms.into_iter().skip(1), &num_traits::One::one(), &qg, &g.terms[1..], &self.order);
        SVec { terms }
    }

    fn reduce(&self, v: SVec) -> SVec {
        reduce_full(v, &self.polys, &self.active, &self.order)
    }
}

/// Core loop; returns the reduced monic basis.
pub(crate) fn groebner(input: Vec<SVec>, order: ModuleOrder, ideal: bool, opts: BuchbergerOptions) -> Vec<SVec> {
    let mut input = linear_basis(input, &order);
    input.sort_by(|a, b| order.cmp_terms(&a.terms[0], &b.terms[0]));
    let mut eng =
        Engine { order, ideal, criteria: opts.criteria, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for v in input {
        let mut r = eng.reduce(v);
        if !r.is_zero() {
            r.make_monic();
            eng.add(r);
        }
    }
    while let Some(p) = eng.next_pair() {
        let s = eng.spoly(&p);
        let mut r = eng.reduce(s);
        if !r.is_zero() {
            r.make_monic();
            eng.add(r);
        }
    }

    let mut active = eng.active.clone();
    if !opts.criteria {
        let polys = &eng.polys;
        let all = active.clone();
        active.retain(|&g| {
            let gl = &polys[g].terms[0];
            !all.iter().any(|&h| {
                let hl = &polys[h].terms[0];
                h != g && hl.comp == gl.comp && hl.mono.divides(&gl.mono) && (hl.mono != gl.mono || h < g)
            })
        });
    }
    let mut out = Vec::with_capacity(active.len());
    for (k, &g) in active.iter().enumerate() {
        let others: Vec<usize> = active.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &h)| h).collect();
        let f = eng.polys[g].clone();
        let mut r = reduce_full(f, &eng.polys, &others, &order);
        r.make_monic();
        out.push(r);
    }
    out
}

//! Sparse module vectors used inside the Gröbner engine.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ModuleElement;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring};

/// Position-over-term or term-over-position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    Pot,
    Top,
}

/// Order on the module terms `x^a e_i`. Lower component indices rank higher.
/// With an elimination ring order the eliminated block is compared before the
/// component, so that the order eliminates the block on the whole module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub ring: MonomialOrder,
    pub kind: ModuleKind,
}

impl ModuleOrder {
    pub fn pot(ring: MonomialOrder) -> Self {
        ModuleOrder { ring, kind: ModuleKind::Pot }
    }

    pub fn top(ring: MonomialOrder) -> Self {
        ModuleOrder { ring, kind: ModuleKind::Top }
    }

    pub fn cmp(&self, am: &Monomial, ac: usize, bm: &Monomial, bc: usize) -> Ordering {
        let block = self.ring.block_cmp(am, bm);
        if block != Ordering::Equal {
            return block;
        }
        match self.kind {
            ModuleKind::Pot => bc.cmp(&ac).then_with(|| self.ring.cmp(am, bm)),
            ModuleKind::Top => self.ring.cmp(am, bm).then_with(|| bc.cmp(&ac)),
        }
    }

    pub(crate) fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(&a.mono, a.comp, &b.mono, b.comp)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub coef: Rational,
    pub mono: Monomial,
    pub comp: usize,
}

/// Terms sorted strictly descending under a module order, no zero
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct SVec {
    pub terms: Vec<Term>,
}

impl SVec {
    pub fn from_element(e: &ModuleElement, order: &ModuleOrder) -> SVec {
        Self::from_components(e.components(), order)
    }

    pub fn from_components(comps: &[Polynomial], order: &ModuleOrder) -> SVec {
        let mut terms: Vec<Term> = comps
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().iter().map(move |(c, m)| Term { coef: c.clone(), mono: m.clone(), comp: i }))
            .collect();
        terms.sort_by(|a, b| order.cmp_terms(b, a));
        SVec { terms }
    }

    pub fn to_element(&self, ring: &Arc<Ring>, rank: usize) -> ModuleElement {
        let mut comps: Vec<Vec<(Rational, Monomial)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            comps[t.comp].push((t.coef.clone(), t.mono.clone()));
        }
        // The module order may use a different monomial order than the ring.
        let order = ring.order();
        let comps = comps
            .into_iter()
            .map(|mut ts| {
                ts.sort_by(|a, b| order.cmp(&b.1, &a.1));
                Polynomial::from_sorted_terms(ring, ts)
            })
            .collect();
        ModuleElement::from_parts(ring, comps)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&mut self, c: &Rational) {
        for t in &mut self.terms {
            t.coef *= c;
        }
    }

    pub fn make_monic(&mut self) {
        if let Some(lead) = self.terms.first() {
            if !lead.coef.is_one() {
                let inv = lead.coef.recip();
                self.scale(&inv);
            }
        }
    }

    /// Scales to coprime integer coefficients with positive leading
    /// coefficient.
    pub fn make_primitive(&mut self) {
        let Some(lead) = self.terms.first() else {
            return;
        };
        let negative = lead.coef.is_negative();
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for t in &self.terms {
            den = den.lcm(t.coef.denom());
            num = num.gcd(t.coef.numer());
        }
        let mut factor = Rational::new(den, num);
        if negative {
            factor = -factor;
        }
        if !factor.is_one() {
            self.scale(&factor);
        }
    }

    /// `c * m * self` with the component shifted by `shift`.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> SVec {
        SVec {
            terms: self.terms.iter().map(|t| Term { coef: &t.coef * c, mono: t.mono.mul(m), comp: t.comp }).collect(),
        }
    }
}

/// `a - c * m * g`, where `a` and `g` are sorted descending.
pub(crate) fn merge_sub<I>(a: I, c: &Rational, m: &Monomial, g: &[Term], order: &ModuleOrder) -> Vec<Term>
where
    I: Iterator<Item = Term>,
{
    let mut out = Vec::new();
    let mut a = a.peekable();
    let mut gi = g.iter().map(|t| Term { coef: -(&t.coef * c), mono: t.mono.mul(m), comp: t.comp }).peekable();
    loop {
        let ord = match (a.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => order.cmp_terms(x, y),
        };
        match ord {
            Ordering::Greater => out.push(a.next().unwrap()),
            Ordering::Less => out.push(gi.next().unwrap()),
            Ordering::Equal => {
                let mut x = a.next().unwrap();
                let y = gi.next().unwrap();
                x.coef += y.coef;
                if !x.coef.is_zero() {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// Fully reduces `v` using divisors chosen by `find`, which maps a term to
/// the index of a basis vector and the monomial multiplier whose product has
/// that term as leading term.
pub(crate) fn reduce_with<F>(v: SVec, basis: &[SVec], order: &ModuleOrder, find: F) -> SVec
where
    F: Fn(&Term) -> Option<(usize, Monomial)>,
{
    let mut done: Vec<Term> = Vec::new();
    let mut cur = v.terms;
    let mut start = 0;
    while start < cur.len() {
        match find(&cur[start]) {
            Some((idx, q)) => {
                let g = &basis[idx];
                let lead = &g.terms[0];
                let c = &cur[start].coef / &lead.coef;
                let rest = cur.drain(start + 1..);
                cur = merge_sub(rest, &c, &q, &g.terms[1..], order);
                start = 0;
            }
            None => {
                done.push(cur[start].clone());
                start += 1;
                if start == cur.len() {
                    break;
                }
                // keep the unreduced tail compact
                if start > 64 {
                    cur.drain(..start);
                    start = 0;
                }
            }
        }
    }
    SVec { terms: done }
}

/// Reduction by leading terms of `basis` restricted to the indices in `active`.
pub(crate) fn reduce_full(v: SVec, basis: &[SVec], active: &[usize], order: &ModuleOrder) -> SVec {
    reduce_with(v, basis, order, |t| {
        active.iter().find_map(|&i| {
            let lead = &basis[i].terms[0];
            if lead.comp == t.comp {
                lead.mono.quotient_of(&t.mono).map(|q| (i, q))
            } else {
                None
            }
        })
    })
}

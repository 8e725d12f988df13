use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Exponents = SmallVec<[u32; 6]>;

/// Dense exponent vector `x^a = x1^a1 * ... * xn^an`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn new<I: IntoIterator<Item = u32>>(exps: I) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `true` iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when it exists.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| b - a).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Inserts `count` zero exponents in front (new leading variables).
    pub(crate) fn extend_front(&self, count: usize) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, count);
        exps.extend_from_slice(&self.exps);
        Monomial { exps, degree: self.degree }
    }

    /// Drops the first `count` exponents, which must be zero.
    pub(crate) fn drop_front(&self, count: usize) -> Option<Monomial> {
        if self.exps[..count].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Monomial::new(self.exps[count..].iter().copied()))
    }
}

/// Ordering used for the trailing variables of an elimination order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseOrder {
    Grevlex,
    Lex,
}

/// Monomial order of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Block order: the first `block` variables are compared first (grevlex
    /// within the block), ties are broken by `rest`.
    Elimination {
        block: usize,
        rest: BaseOrder,
    },
}

impl From<BaseOrder> for MonomialOrder {
    fn from(o: BaseOrder) -> Self {
        match o {
            BaseOrder::Grevlex => MonomialOrder::Grevlex,
            BaseOrder::Lex => MonomialOrder::Lex,
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

impl MonomialOrder {
    /// Compares two monomials of equal arity. Panics on arity mismatch in
    /// debug builds; use [`monomial_compare`] for a checked variant.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match *self {
            MonomialOrder::Grevlex => {
                if a.degree != b.degree {
                    return a.degree.cmp(&b.degree);
                }
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => lex(&a.exps, &b.exps),
            MonomialOrder::Elimination { block, rest } => {
                let head = grevlex(&a.exps[..block], &b.exps[..block]);
                if head != Ordering::Equal {
                    return head;
                }
                match rest {
                    BaseOrder::Grevlex => grevlex(&a.exps[block..], &b.exps[block..]),
                    BaseOrder::Lex => lex(&a.exps[block..], &b.exps[block..]),
                }
            }
        }
    }

    /// Comparison restricted to the eliminated block; `Equal` for orders
    /// without a block.
    pub(crate) fn block_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Elimination { block, .. } => grevlex(&a.exps[..block], &b.exps[..block]),
            _ => Ordering::Equal,
        }
    }

    /// The order applied to variables that survive elimination.
    pub fn base(&self) -> BaseOrder {
        match *self {
            MonomialOrder::Grevlex => BaseOrder::Grevlex,
            MonomialOrder::Lex => BaseOrder::Lex,
            MonomialOrder::Elimination { rest, .. } => rest,
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination { block, rest } => {
                format!("elim({block},{})", MonomialOrder::from(*rest).name())
            }
        }
    }
}

/// Checked comparison of two monomials under `order`.
pub fn monomial_compare(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch { expected: a.arity(), found: b.arity() });
    }
    if let MonomialOrder::Elimination { block, .. } = order {
        if block > a.arity() {
            return Err(Error::ArityMismatch { expected: block, found: a.arity() });
        }
    }
    Ok(order.cmp(a, b))
}

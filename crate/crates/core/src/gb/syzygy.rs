//! Syzygies via coefficient tracking.
//!
//! Each generator `g_i` of `R^k` is augmented to `(g_i, e_i)` in `R^(k+s)`.
//! The trailing `s` coordinates record how every basis element was obtained
//! from the generators. Under the position-over-term order, with the original
//! `k` components ranking highest, the basis elements whose leading term lies
//! in a tracking component have vanishing first `k` coordinates; their
//! tracking parts form a reduced Gröbner basis of the syzygy module.

use std::sync::Arc;

use num_traits::One;

use super::basis::{groebner, BuchbergerOptions, Submodule};
use super::vector::{ModuleOrder, SVec, Term};
use super::{ModuleElement, PolyMatrix};
use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, Rational, Ring};

/// Module of relations `{c in R^s : sum c_i g_i = 0}` among the generators.
pub fn syzygy_module(ring: &Arc<Ring>, rank: usize, gens: &[ModuleElement]) -> Result<Submodule> {
    syzygy_module_with(ring, rank, gens, BuchbergerOptions::default())
}

pub fn syzygy_module_with(
    ring: &Arc<Ring>,
    rank: usize,
    gens: &[ModuleElement],
    opts: BuchbergerOptions,
) -> Result<Submodule> {
    let s = gens.len();
    if s == 0 {
        return Err(Error::RankMismatch { expected: 1, found: 0 });
    }
    for g in gens {
        if !same_ring(ring, g.ring()) {
            return Err(Error::RingMismatch);
        }
        if g.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, found: g.rank() });
        }
    }
    let order = ModuleOrder::pot(ring.order());
    let one = Monomial::one(ring.nvars());
    let augmented: Vec<SVec> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut v = SVec::from_element(g, &order);
            v.terms.push(Term { coef: Rational::one(), mono: one.clone(), comp: rank + i });
            v
        })
        .collect();
    let basis = groebner(augmented, order, false, opts);
    let syz: Vec<SVec> = basis
        .into_iter()
        .filter(|v| v.terms[0].comp >= rank)
        .map(|mut v| {
            for t in &mut v.terms {
                t.comp -= rank;
            }
            v
        })
        .collect();
    Ok(Submodule::from_monic(ring, s, order, syz))
}

/// Matrix `S` whose columns generate `ker_R A = {u in R^k : A u = 0}`.
/// An injective `A` yields a `k x 0` matrix.
pub fn syzygy_matrix(a: &PolyMatrix) -> PolyMatrix {
    let ring = a.ring();
    let k = a.ncols();
    if k == 0 {
        return PolyMatrix::zeros(ring, 0, 0);
    }
    if a.nrows() == 0 {
        return PolyMatrix::identity(ring, k);
    }
    let syz = syzygy_module(ring, a.nrows(), &a.columns()).expect("columns share ring and rank");
    PolyMatrix::from_columns(ring, k, syz.generators()).expect("syzygies have rank k")
}

//! Minors, generic rank, Fitting ideals and radical membership.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg::evaluate_matrix;
use crate::error::Result;
use crate::gb::PolyMatrix;
use crate::module_ops::{colon_ideal, lift_poly, row_module, Ideal};
use crate::poly::{GaussianRational, Polynomial};
use crate::{ModuleElement, Ring};

const RANK_PROBE_SEED: u64 = 0x5eed_5eed;
const RANK_PROBES: usize = 3;

/// Memoized Laplace expansion of the minors of one matrix. Row and column
/// subsets are bitmasks, so matrices are limited to 64 rows and columns.
pub(crate) struct Minors<'a> {
    a: &'a PolyMatrix,
    memo: HashMap<(u64, u64), Polynomial>,
}

impl<'a> Minors<'a> {
    pub(crate) fn new(a: &'a PolyMatrix) -> Self {
        assert!(a.nrows() <= 64 && a.ncols() <= 64, "minor expansion supports at most 64 rows and columns");
        Minors { a, memo: HashMap::new() }
    }

    pub(crate) fn det(&mut self, rows: u64, cols: u64) -> Polynomial {
        if rows == 0 {
            return Polynomial::one(self.a.ring());
        }
        if let Some(d) = self.memo.get(&(rows, cols)) {
            return d.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let rest = rows & (rows - 1);
        let mut acc = Polynomial::zero(self.a.ring());
        let mut sign_negative = false;
        let mut remaining = cols;
        while remaining != 0 {
            let c = remaining.trailing_zeros() as usize;
            remaining &= remaining - 1;
            let entry = self.a.get(r, c);
            if !entry.is_zero() {
                let sub = self.det(rest, cols & !(1u64 << c));
                if !sub.is_zero() {
                    let term = entry * &sub;
                    acc = if sign_negative { &acc - &term } else { &acc + &term };
                }
            }
            sign_negative = !sign_negative;
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }

    /// All `j x j` minors in lexicographic order of (rows, columns).
    pub(crate) fn all(&mut self, j: usize) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for rows in subsets(self.a.nrows(), j) {
            for cols in subsets(self.a.ncols(), j) {
                out.push(self.det(rows, cols));
            }
        }
        out
    }

    fn any_nonzero(&mut self, j: usize) -> bool {
        for rows in subsets(self.a.nrows(), j) {
            for cols in subsets(self.a.ncols(), j) {
                if !self.det(rows, cols).is_zero() {
                    return true;
                }
            }
        }
        false
    }
}

/// Bitmasks of all `j`-element subsets of `0..n`, in lexicographic order.
pub(crate) fn subsets(n: usize, j: usize) -> Vec<u64> {
    fn go(start: usize, n: usize, j: usize, mask: u64, out: &mut Vec<u64>) {
        if j == 0 {
            out.push(mask);
            return;
        }
        for i in start..=n - j {
            go(i + 1, n, j - 1, mask | (1u64 << i), out);
        }
    }
    let mut out = Vec::new();
    if j <= n {
        go(0, n, j, 0, &mut out);
    }
    out
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Rank over the fraction field: a lower bound from seeded integer points,
/// confirmed by showing that every minor one size larger vanishes.
pub fn generic_rank(a: &PolyMatrix) -> usize {
    if a.is_zero() {
        return 0;
    }
    let full = a.nrows().min(a.ncols());
    let mut rng = ChaCha8Rng::seed_from_u64(RANK_PROBE_SEED);
    let n = a.ring().nvars();
    let mut lower = 0;
    for _ in 0..RANK_PROBES {
        let point: Vec<GaussianRational> =
            (0..n).map(|_| GaussianRational::from_int(rng.gen_range(-101..=101))).collect();
        let r = evaluate_matrix(a, &point).expect("arity matches").rank;
        lower = lower.max(r);
        if lower == full {
            return full;
        }
    }
    let mut minors = Minors::new(a);
    let mut r = lower.max(1);
    while r < full && minors.any_nonzero(r + 1) {
        r += 1;
    }
    r
}

/// Fitting ideals `I_j(A)`, generated by the `j x j` minors of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingData {
    /// `ideals[j - 1] = I_j(A)` for `j = 1..=min(l, k)`.
    pub ideals: Vec<Ideal>,
    pub generic_rank: usize,
    /// Size of the minors generating the first nonzero Fitting ideal `I(M)`
    /// of `M = R^k / im A^T`; equals the generic rank. `I_0 = (1)`.
    pub first_nonzero_size: usize,
    /// Index `k - r` of that ideal in the module convention `Fitt_{k-r}(M)`.
    pub module_index: usize,
}

impl FittingData {
    /// `I_j(A)`, with `I_0 = (1)` and `I_j = (0)` past the matrix size.
    pub fn ideal(&self, ring: &Arc<Ring>, j: usize) -> Ideal {
        match j {
            0 => Ideal::unit(ring),
            j if j <= self.ideals.len() => self.ideals[j - 1].clone(),
            _ => Ideal::zero(ring),
        }
    }

    pub fn first_nonzero(&self, ring: &Arc<Ring>) -> Ideal {
        self.ideal(ring, self.first_nonzero_size)
    }
}

/// All Fitting ideals of `A`. Sizes above the generic rank are zero and are
/// not expanded.
pub fn fitting_ideals(a: &PolyMatrix) -> Result<FittingData> {
    let r = generic_rank(a);
    let ring = a.ring();
    let mut minors = Minors::new(a);
    let mut ideals = Vec::new();
    for j in 1..=a.nrows().min(a.ncols()) {
        ideals.push(if j <= r { Ideal::generate(ring, &minors.all(j))? } else { Ideal::zero(ring) });
    }
    Ok(FittingData { ideals, generic_rank: r, first_nonzero_size: r, module_index: a.ncols() - r })
}

/// The single Fitting ideal `I_j(A)`.
pub fn fitting_ideal(a: &PolyMatrix, j: usize) -> Result<Ideal> {
    if j == 0 {
        return Ok(Ideal::unit(a.ring()));
    }
    if j > a.nrows().min(a.ncols()) {
        return Ok(Ideal::zero(a.ring()));
    }
    Ideal::generate(a.ring(), &Minors::new(a).all(j))
}

/// Number of `j x j` minors of `A`.
pub fn minor_count(a: &PolyMatrix, j: usize) -> u128 {
    binomial(a.nrows(), j) * binomial(a.ncols(), j)
}

/// `f in sqrt(I)`, decided by `1 in I + (1 - t f)` over `R[t]`.
pub fn radical_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.is_zero() || ideal.is_unit() || ideal.contains(f)? {
        return Ok(true);
    }
    if ideal.is_zero() {
        return Ok(false);
    }
    let ring = ideal.ring();
    let ext = ring.extend_front(1, ring.order());
    let t = Polynomial::var(&ext, 0);
    let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| lift_poly(g, &ext)).collect();
    gens.push(&Polynomial::one(&ext) - &(&t * &lift_poly(f, &ext)));
    Ok(Ideal::generate(&ext, &gens)?.is_unit())
}

/// Least `s >= 1` with `f^s in I`, searched up to `cap`.
pub fn membership_exponent(f: &Polynomial, ideal: &Ideal, cap: u32) -> Result<Option<u32>> {
    let mut power = f.clone();
    for s in 1..=cap {
        if ideal.contains(&power)? {
            return Ok(Some(s));
        }
        power = &power * f;
    }
    Ok(None)
}

/// `Ann(R^k / im A^T)`, the intersection of the colon ideals `(im A^T : e_j)`.
pub fn cokernel_annihilator(a: &PolyMatrix) -> Result<Ideal> {
    let ring = a.ring();
    let m = row_module(a)?;
    let mut acc = Ideal::unit(ring);
    for j in 0..a.ncols() {
        let e = ModuleElement::unit(ring, a.ncols(), j);
        if !m.contains(&e)? {
            acc = acc.intersect(&colon_ideal(&m, &e)?)?;
        }
    }
    Ok(acc)
}

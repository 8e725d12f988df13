//! Pointwise exactness `ker A(ξ) = im S(ξ)` and the wave-cone span of `S`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::linalg::{evaluate_matrix, rref};
use super::minors::generic_rank;
use crate::error::{Error, Result};
use crate::gb::PolyMatrix;
use crate::poly::{same_ring, GaussianRational, Monomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    StrictSuperset,
}

/// `ker A(ξ)` against `im S(ξ)` at one point. Since `A S = 0`, the image is
/// always contained in the kernel; they are equal iff dimensions agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalComparison {
    pub point: Vec<GaussianRational>,
    pub rank_a: usize,
    pub dim_ker_a: usize,
    pub dim_im_s: usize,
    pub relation: Relation,
    pub generic_rank: usize,
    /// Equality holds exactly at the points of maximal rank.
    pub conforms: bool,
}

fn check_complex(a: &PolyMatrix, s: &PolyMatrix) -> Result<()> {
    if !same_ring(a.ring(), s.ring()) {
        return Err(Error::RingMismatch);
    }
    if s.nrows() != a.ncols() {
        return Err(Error::RankMismatch { expected: a.ncols(), found: s.nrows() });
    }
    if !a.try_mul(s)?.is_zero() {
        return Err(Error::NotAComplex);
    }
    Ok(())
}

pub fn pointwise_exactness(a: &PolyMatrix, s: &PolyMatrix, point: &[GaussianRational]) -> Result<EvalComparison> {
    check_complex(a, s)?;
    compare_at(a, s, generic_rank(a), point)
}

/// Comparisons at several points, sharing the `A S = 0` check and the
/// generic rank.
pub fn pointwise_exactness_all(
    a: &PolyMatrix,
    s: &PolyMatrix,
    points: &[Vec<GaussianRational>],
) -> Result<Vec<EvalComparison>> {
    check_complex(a, s)?;
    let r = generic_rank(a);
    points.iter().map(|p| compare_at(a, s, r, p)).collect()
}

/// Comparison without re-checking `A S = 0`.
pub(crate) fn compare_at(
    a: &PolyMatrix,
    s: &PolyMatrix,
    generic: usize,
    point: &[GaussianRational],
) -> Result<EvalComparison> {
    let ea = evaluate_matrix(a, point)?;
    let dim_im_s = if s.ncols() == 0 { 0 } else { evaluate_matrix(s, point)?.rank };
    let dim_ker_a = ea.kernel_dim();
    let relation = if dim_im_s == dim_ker_a { Relation::Equal } else { Relation::StrictSuperset };
    Ok(EvalComparison {
        point: point.to_vec(),
        rank_a: ea.rank,
        dim_ker_a,
        dim_im_s,
        relation,
        generic_rank: generic,
        conforms: (relation == Relation::Equal) == (ea.rank == generic),
    })
}

/// Reduced-echelon basis of the span of all `S(ξ)` columns, i.e. of the
/// coefficient vectors of every monomial in every column of `S`.
pub fn wave_cone_span(s: &PolyMatrix) -> Vec<Vec<Rational>> {
    let k = s.nrows();
    let mut vectors: Vec<Vec<GaussianRational>> = Vec::new();
    for j in 0..s.ncols() {
        let mut monomials: Vec<&Monomial> = (0..k).flat_map(|i| s.get(i, j).terms().iter().map(|(_, m)| m)).collect();
        monomials.sort();
        monomials.dedup();
        for m in monomials {
            vectors.push(
                (0..k)
                    .map(|i| {
                        let coef = s.get(i, j).terms().iter().find(|(_, t)| t == m).map(|(c, _)| c.clone());
                        GaussianRational::real(coef.unwrap_or_else(Rational::zero))
                    })
                    .collect(),
            );
        }
    }
    rref(&vectors, k).0.into_iter().map(|row| row.into_iter().map(|c| c.re).collect()).collect()
}

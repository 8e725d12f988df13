//! Exact complex ellipticity / constant-rank decisions and the sampled
//! semi-decisions of their real counterparts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::linalg::evaluate_matrix;
use super::minors::{
    cokernel_annihilator, fitting_ideal, generic_rank, membership_exponent, minor_count, radical_membership,
};
use crate::error::{Error, Result};
use crate::gb::PolyMatrix;
use crate::module_ops::Ideal;
use crate::poly::{GaussianRational, Polynomial};

/// Above this many `k x k` minors the ellipticity test works with the
/// annihilator of the cokernel, which has the same radical as `I_k`.
pub const MINOR_LIMIT: u128 = 5000;

const EXPONENT_CAP: u32 = 32;
const GRID_MAX_VARS: usize = 6;

/// Sampling box `[-B, B]^n` of the real semi-decisions.
pub const SAMPLE_BOUND: i64 = 101;

/// Row-homogeneity of a symbol: each row's nonzero entries share one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Homogeneity {
    pub row_homogeneous: bool,
    /// Common degree of each row; `None` for zero rows and inhomogeneous rows.
    pub row_degrees: Vec<Option<u32>>,
    /// Same test applied to columns; reported because the two readings of
    /// the homogeneity assumption can disagree.
    pub column_homogeneous: bool,
}

fn common_degree<'a>(entries: impl Iterator<Item = &'a Polynomial>) -> (bool, Option<u32>) {
    let mut degree = None;
    for p in entries.filter(|p| !p.is_zero()) {
        match (p.homogeneous_degree(), degree) {
            (None, _) => return (false, None),
            (Some(d), None) => degree = Some(d),
            (Some(d), Some(e)) if d != e => return (false, None),
            _ => {}
        }
    }
    (true, degree)
}

pub fn is_row_homogeneous(a: &PolyMatrix) -> Homogeneity {
    let rows: Vec<(bool, Option<u32>)> =
        (0..a.nrows()).map(|i| common_degree((0..a.ncols()).map(|j| a.get(i, j)))).collect();
    let column_homogeneous = (0..a.ncols()).all(|j| common_degree((0..a.nrows()).map(|i| a.get(i, j))).0);
    Homogeneity {
        row_homogeneous: rows.iter().all(|r| r.0),
        row_degrees: rows.into_iter().map(|r| r.1).collect(),
        column_homogeneous,
    }
}

fn require_homogeneous(a: &PolyMatrix) -> Result<()> {
    if is_row_homogeneous(a).row_homogeneous {
        Ok(())
    } else {
        Err(Error::NotHomogeneous)
    }
}

/// Which ideal a radical certificate refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum IdealSource {
    /// `I_size(A)`, generated by the minors of that size.
    Minors { size: usize },
    /// `Ann(R^k / im A^T)`; same radical as `I_k(A)`.
    Annihilator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalWitness {
    pub variable: String,
    /// Least `s` with `x^s` in the ideal, when found below the search cap.
    pub exponent: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every variable lies in the radical of the ideal.
    Radical { ideal: IdealSource, witnesses: Vec<RadicalWitness> },
    /// A nonzero point where the rank is below the required value.
    Point { point: Vec<GaussianRational>, rank: usize },
    /// The variable is outside the radical, but no explicit point was found
    /// among the hints and the search grid.
    NotInRadical { ideal: IdealSource, variable: String },
    /// Nothing to prove (no columns, or generic rank zero).
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexVerdict {
    pub holds: bool,
    pub generic_rank: usize,
    pub certificate: Certificate,
}

/// Nonzero points of `{0, 1, i, -1, -i}^n`, first coordinate most significant.
pub fn witness_grid(n: usize) -> impl Iterator<Item = Vec<GaussianRational>> {
    let values = [
        GaussianRational::zero(),
        GaussianRational::one(),
        GaussianRational::i(),
        GaussianRational::from_int(-1),
        -GaussianRational::i(),
    ];
    let digits = n.min(GRID_MAX_VARS);
    let total = 5usize.pow(digits as u32);
    (1..total).map(move |mut idx| {
        let mut point = vec![GaussianRational::zero(); n];
        for slot in (0..digits).rev() {
            point[slot] = values[idx % 5].clone();
            idx /= 5;
        }
        point
    })
}

fn is_nonzero_point(p: &[GaussianRational]) -> bool {
    p.iter().any(|c| !c.is_zero())
}

/// First nonzero point among `hints`, then the grid, with rank below `target`.
fn find_rank_drop(
    a: &PolyMatrix,
    target: usize,
    hints: &[Vec<GaussianRational>],
) -> Result<Option<(Vec<GaussianRational>, usize)>> {
    let n = a.ring().nvars();
    for p in hints.iter().filter(|p| p.len() == n && is_nonzero_point(p)) {
        let rank = evaluate_matrix(a, p)?.rank;
        if rank < target {
            return Ok(Some((p.clone(), rank)));
        }
    }
    for p in witness_grid(n) {
        let rank = evaluate_matrix(a, &p)?.rank;
        if rank < target {
            return Ok(Some((p, rank)));
        }
    }
    Ok(None)
}

fn radical_verdict(
    a: &PolyMatrix,
    ideal: &Ideal,
    source: IdealSource,
    target: usize,
    generic: usize,
    hints: &[Vec<GaussianRational>],
) -> Result<ComplexVerdict> {
    let ring = a.ring();
    let mut witnesses = Vec::new();
    for (i, name) in ring.variables().iter().enumerate() {
        let x = Polynomial::var(ring, i);
        if !radical_membership(&x, ideal)? {
            let certificate = match find_rank_drop(a, target, hints)? {
                Some((point, rank)) => Certificate::Point { point, rank },
                None => Certificate::NotInRadical { ideal: source, variable: name.clone() },
            };
            return Ok(ComplexVerdict { holds: false, generic_rank: generic, certificate });
        }
        witnesses
            .push(RadicalWitness { variable: name.clone(), exponent: membership_exponent(&x, ideal, EXPONENT_CAP)? });
    }
    Ok(ComplexVerdict {
        holds: true,
        generic_rank: generic,
        certificate: Certificate::Radical { ideal: source, witnesses },
    })
}

pub fn is_c_elliptic(a: &PolyMatrix) -> Result<ComplexVerdict> {
    is_c_elliptic_with(a, &[])
}

/// `ker A(ξ) = 0` for all `ξ in C^n \ 0`: decided as `k <= l`, generic rank
/// `k`, and every variable in `sqrt(I_k(A))`. `hints` are tried first when a
/// counterexample point is wanted.
pub fn is_c_elliptic_with(a: &PolyMatrix, hints: &[Vec<GaussianRational>]) -> Result<ComplexVerdict> {
    require_homogeneous(a)?;
    let k = a.ncols();
    let r = generic_rank(a);
    if k == 0 {
        return Ok(ComplexVerdict { holds: true, generic_rank: r, certificate: Certificate::Vacuous });
    }
    if r < k {
        let (point, rank) = find_rank_drop(a, k, hints)?.expect("every nonzero point drops rank");
        return Ok(ComplexVerdict { holds: false, generic_rank: r, certificate: Certificate::Point { point, rank } });
    }
    let (ideal, source) = if minor_count(a, k) <= MINOR_LIMIT {
        (fitting_ideal(a, k)?, IdealSource::Minors { size: k })
    } else {
        (cokernel_annihilator(a)?, IdealSource::Annihilator)
    };
    radical_verdict(a, &ideal, source, k, r, hints)
}

pub fn is_c_constant_rank(a: &PolyMatrix) -> Result<ComplexVerdict> {
    is_c_constant_rank_with(a, &[])
}

/// `rank A(ξ) = r` for all `ξ in C^n \ 0`, `r` the generic rank: decided as
/// every variable in `sqrt(I_r(A))`.
pub fn is_c_constant_rank_with(a: &PolyMatrix, hints: &[Vec<GaussianRational>]) -> Result<ComplexVerdict> {
    require_homogeneous(a)?;
    let r = generic_rank(a);
    if r == 0 {
        return Ok(ComplexVerdict { holds: true, generic_rank: 0, certificate: Certificate::Vacuous });
    }
    radical_verdict(a, &fitting_ideal(a, r)?, IdealSource::Minors { size: r }, r, r, hints)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RealCondition {
    Ellipticity,
    ConstantRank,
}

/// Three-valued outcome of a real semi-decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealVerdict {
    /// A nonzero real point with rank below the required value.
    Refuted { point: Vec<GaussianRational>, rank: usize },
    /// The complex condition holds, which implies the real one.
    CertifiedViaComplex,
    /// Neither refuted by the witnesses and samples nor certified.
    Inconclusive { samples: usize },
}

impl RealVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            RealVerdict::Refuted { .. } => "refuted",
            RealVerdict::CertifiedViaComplex => "certified_via_complex",
            RealVerdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Seeded integer points of `[-B, B]^n \ 0`.
pub fn sample_points(n: usize, count: usize, seed: u64) -> Vec<Vec<GaussianRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count && n > 0 {
        let coords: Vec<i64> = (0..n).map(|_| rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND)).collect();
        if coords.iter().any(|&c| c != 0) {
            out.push(coords.into_iter().map(GaussianRational::from_int).collect());
        }
    }
    out
}

/// Real ellipticity or constant rank: refuted by a real witness or sample,
/// certified when the complex test passes, inconclusive otherwise.
pub fn check_r_condition(
    a: &PolyMatrix,
    kind: RealCondition,
    witnesses: &[Vec<GaussianRational>],
    samples: usize,
    seed: u64,
) -> Result<RealVerdict> {
    let complex = match kind {
        RealCondition::Ellipticity => is_c_elliptic_with(a, witnesses)?,
        RealCondition::ConstantRank => is_c_constant_rank_with(a, witnesses)?,
    };
    real_verdict(a, kind, &complex, witnesses, samples, seed)
}

/// [`check_r_condition`] with the complex verdict already known.
pub fn real_verdict(
    a: &PolyMatrix,
    kind: RealCondition,
    complex: &ComplexVerdict,
    witnesses: &[Vec<GaussianRational>],
    samples: usize,
    seed: u64,
) -> Result<RealVerdict> {
    let target = match kind {
        RealCondition::Ellipticity => a.ncols(),
        RealCondition::ConstantRank => complex.generic_rank,
    };
    let n = a.ring().nvars();
    for p in witnesses {
        if p.len() != n {
            return Err(Error::ArityMismatch { expected: n, found: p.len() });
        }
        if is_nonzero_point(p) && p.iter().all(GaussianRational::is_real) {
            let rank = evaluate_matrix(a, p)?.rank;
            if rank < target {
                return Ok(RealVerdict::Refuted { point: p.clone(), rank });
            }
        }
    }
    if complex.holds {
        return Ok(RealVerdict::CertifiedViaComplex);
    }
    for p in sample_points(n, samples, seed) {
        let rank = evaluate_matrix(a, &p)?.rank;
        if rank < target {
            return Ok(RealVerdict::Refuted { point: p, rank });
        }
    }
    Ok(RealVerdict::Inconclusive { samples })
}

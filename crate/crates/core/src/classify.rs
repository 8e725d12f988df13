//! One-shot classification of an operator: homogeneity, generic rank, the
//! exact complex conditions, the real semi-decisions and controllability.

use crate::decompose::{classify_controllability, ControllabilityVerdict};
use crate::document::{DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::error::Result;
use crate::gb::PolyMatrix;
use crate::poly::GaussianRational;
use crate::rank::{
    generic_rank, is_c_constant_rank_with, is_c_elliptic_with, is_row_homogeneous, real_verdict, ComplexVerdict,
    Homogeneity, RealCondition, RealVerdict,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Tried first, both as complex counterexamples and as real witnesses.
    pub points: Vec<Vec<GaussianRational>>,
    pub samples: usize,
    pub seed: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { points: Vec::new(), samples: DEFAULT_SAMPLES, seed: DEFAULT_SEED }
    }
}

/// The four ellipticity/constant-rank verdicts are `None` when the operator
/// is not row-homogeneous, where the definitions are not scale invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub homogeneity: Homogeneity,
    pub generic_rank: usize,
    pub c_elliptic: Option<ComplexVerdict>,
    pub c_constant_rank: Option<ComplexVerdict>,
    pub r_elliptic: Option<RealVerdict>,
    pub r_constant_rank: Option<RealVerdict>,
    pub controllability: ControllabilityVerdict,
}

impl ClassificationReport {
    /// The implications complex ⇒ real and elliptic ⇒ constant rank `k`.
    pub fn is_consistent(&self, k: usize) -> bool {
        let certified = |v: &Option<RealVerdict>| matches!(v, Some(RealVerdict::CertifiedViaComplex));
        match (&self.c_elliptic, &self.c_constant_rank) {
            (Some(e), Some(c)) => {
                (!e.holds || (certified(&self.r_elliptic) && c.holds && self.generic_rank == k))
                    && (!c.holds || certified(&self.r_constant_rank))
            }
            _ => true,
        }
    }
}

pub fn classify(a: &PolyMatrix, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let homogeneity = is_row_homogeneous(a);
    let (c_elliptic, c_constant_rank, r_elliptic, r_constant_rank) = if homogeneity.row_homogeneous {
        let ce = is_c_elliptic_with(a, &opts.points)?;
        let cc = is_c_constant_rank_with(a, &opts.points)?;
        let re = real_verdict(a, RealCondition::Ellipticity, &ce, &opts.points, opts.samples, opts.seed)?;
        let rc = real_verdict(a, RealCondition::ConstantRank, &cc, &opts.points, opts.samples, opts.seed)?;
        (Some(ce), Some(cc), Some(re), Some(rc))
    } else {
        (None, None, None, None)
    };
    Ok(ClassificationReport {
        homogeneity,
        generic_rank: generic_rank(a),
        c_elliptic,
        c_constant_rank,
        r_elliptic,
        r_constant_rank,
        controllability: classify_controllability(a)?,
    })
}

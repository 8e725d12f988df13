//! Generic rank, Fitting ideals, exact complex conditions, real
//! semi-decisions, pointwise exactness and the wave-cone span.

mod linalg;
mod minors;
mod pointwise;
mod verdict;

pub use linalg::{evaluate_matrix, in_span, rank_of, rref, EvaluatedMatrix};
pub use minors::{
    cokernel_annihilator, fitting_ideal, fitting_ideals, generic_rank, membership_exponent, minor_count,
    radical_membership, FittingData,
};
pub(crate) use pointwise::compare_at;
pub use pointwise::{pointwise_exactness, pointwise_exactness_all, wave_cone_span, EvalComparison, Relation};
pub use verdict::{
    check_r_condition, is_c_constant_rank, is_c_constant_rank_with, is_c_elliptic, is_c_elliptic_with,
    is_row_homogeneous, real_verdict, sample_points, witness_grid, Certificate, ComplexVerdict, Homogeneity,
    IdealSource, RadicalWitness, RealCondition, RealVerdict, MINOR_LIMIT, SAMPLE_BOUND,
};

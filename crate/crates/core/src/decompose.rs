//! Controllable–uncontrollable decomposition `im A^T = im A_c^T ∩ im A_u^T`
//! and the controllability trichotomy.
//!
//! `A_c` presents the torsion-free closure of `im A^T`. `A_u` presents
//! `im A^T + I^m R^k`, where `I = Ann(M_c / M)` is the conductor and `m` the
//! least exponent for which the intersection identity holds. The cokernel of
//! `A_u` is killed by `I^m`, hence torsion. Every result re-proves its own
//! postconditions; see [`DecompositionResult::checks`].

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gb::{syzygy_matrix, ModuleElement, PolyMatrix, Submodule};
use crate::module_ops::{
    annihilator_quotient, colon_ideal, intersect_modules, module_equal, row_module, tf_closure,
    tf_closure_from_syzygies, Ideal,
};
use crate::rank::generic_rank;
use crate::Ring;

/// Safety cap on the exponent search; reaching it is a diagnostic.
pub const EXPONENT_CAP: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    pub a_c: PolyMatrix,
    pub a_u: PolyMatrix,
    /// Syzygy matrix of `A` (equivalently of `A_c`).
    pub s: PolyMatrix,
    /// `Ann(M_c / M)` with `M = im A^T`, `M_c` its torsion-free closure.
    pub conductor: Ideal,
    pub exponent: u32,
    /// Outcomes, in this order:
    /// `ker_ac_equals_im_s`, `ac_cokernel_torsion_free`, `au_cokernel_torsion`,
    /// `intersection_identity`, `au_injective`, `ker_a_equals_ker_ac`.
    pub checks: Vec<Check>,
}

impl DecompositionResult {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }
}

fn matrix_of(ring: &Arc<Ring>, k: usize, m: &Submodule) -> Result<PolyMatrix> {
    PolyMatrix::from_row_elements(ring, k, m.generators())
}

/// `A_c`: rows generate the torsion-free closure of `im A^T`.
pub fn controllable_part(a: &PolyMatrix) -> Result<PolyMatrix> {
    matrix_of(a.ring(), a.ncols(), &tf_closure(a)?)
}

/// `(A_u, I, m)`; see the module documentation.
pub fn uncontrollable_part(a: &PolyMatrix) -> Result<(PolyMatrix, Ideal, u32)> {
    let closure = tf_closure(a)?;
    uncontrollable_from_closure(a, &closure)
}

fn uncontrollable_from_closure(a: &PolyMatrix, closure: &Submodule) -> Result<(PolyMatrix, Ideal, u32)> {
    let ring = a.ring();
    let k = a.ncols();
    let m = row_module(a)?;
    let conductor = annihilator_quotient(closure, &m)?;
    if conductor.is_unit() {
        return Ok((PolyMatrix::identity(ring, k), conductor, 0));
    }
    let mut power = Ideal::unit(ring);
    for exponent in 1..=EXPONENT_CAP {
        power = power.product(&conductor)?;
        let mut gens = m.generators().to_vec();
        for g in power.generators() {
            gens.extend((0..k).map(|j| ModuleElement::unit(ring, k, j).scale(&g)));
        }
        let mu = Submodule::generate(ring, k, &gens)?;
        if module_equal(&intersect_modules(closure, &mu)?, &m)? {
            return Ok((matrix_of(ring, k, &mu)?, conductor, exponent));
        }
    }
    Err(Error::ExponentCap(EXPONENT_CAP))
}

/// Assembles `A_c`, `A_u`, `S`, the conductor and exponent, and runs every
/// verification check.
pub fn decompose(a: &PolyMatrix) -> Result<DecompositionResult> {
    let ring = a.ring();
    let k = a.ncols();
    let s = syzygy_matrix(a);
    let closure = tf_closure_from_syzygies(ring, k, &s)?;
    let a_c = matrix_of(ring, k, &closure)?;
    let (a_u, conductor, exponent) = uncontrollable_from_closure(a, &closure)?;

    let m = row_module(a)?;
    let mu = row_module(&a_u)?;
    let s_module = column_module(&s)?;
    let s_c = syzygy_matrix(&a_c);
    let mut checks = Vec::new();
    let mut record = |name, passed| checks.push(Check { name, passed });

    record("ker_ac_equals_im_s", module_equal(&column_module(&s_c)?, &s_module)?);
    record("ac_cokernel_torsion_free", module_equal(&tf_closure(&a_c)?, &closure)?);
    let mut torsion = true;
    for j in 0..k {
        if colon_ideal(&mu, &ModuleElement::unit(ring, k, j))?.is_zero() {
            torsion = false;
        }
    }
    record("au_cokernel_torsion", torsion);
    record("intersection_identity", module_equal(&intersect_modules(&closure, &mu)?, &m)?);
    record("au_injective", syzygy_matrix(&a_u).ncols() == 0);
    record("ker_a_equals_ker_ac", a_c.try_mul(&s)?.is_zero() && a.try_mul(&s_c)?.is_zero());

    Ok(DecompositionResult { a_c, a_u, s, conductor, exponent, checks })
}

fn column_module(s: &PolyMatrix) -> Result<Submodule> {
    Submodule::generate(s.ring(), s.nrows(), &s.columns())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Controllability {
    Controllable,
    Uncontrollable,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ControllabilityVerdict {
    pub verdict: Controllability,
    pub generic_rank: usize,
    /// `ker_R A = 0`, i.e. the syzygy matrix is empty.
    pub syzygy_empty: bool,
    /// `im A^T` equals its torsion-free closure.
    pub torsion_free: bool,
}

/// Uncontrollable iff `S` is empty; otherwise controllable iff `im A^T` is
/// its own torsion-free closure; mixed otherwise. A trivial cokernel
/// (`im A^T = R^k`) satisfies both tests and is reported as uncontrollable.
pub fn classify_controllability(a: &PolyMatrix) -> Result<ControllabilityVerdict> {
    let s = syzygy_matrix(a);
    let closure = tf_closure_from_syzygies(a.ring(), a.ncols(), &s)?;
    let torsion_free = module_equal(&row_module(a)?, &closure)?;
    let syzygy_empty = s.ncols() == 0;
    let verdict = if syzygy_empty {
        Controllability::Uncontrollable
    } else if torsion_free {
        Controllability::Controllable
    } else {
        Controllability::Mixed
    };
    Ok(ControllabilityVerdict { verdict, generic_rank: generic_rank(a), syzygy_empty, torsion_free })
}

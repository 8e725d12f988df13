//! Random instances and invariant checkers shared by the property and
//! acceptance suites. Checkers return `Err(description)` on a violation.

#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use syzkit::decompose::decompose;
use syzkit::module_ops::{module_equal, row_module, saturate, tf_closure};
use syzkit::rank::{fitting_ideals, EvaluatedMatrix};
use syzkit::{
    syzygy_matrix, GaussianRational, ModuleElement, Monomial, PolyMatrix, Polynomial, Rational, Ring, Submodule,
};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn random_poly(rng: &mut impl Rng, ring: &Arc<Ring>, max_terms: usize, max_deg: u32, bound: i64) -> Polynomial {
    let n = ring.nvars();
    let terms = (0..rng.gen_range(0..=max_terms)).map(|_| {
        let mut left = rng.gen_range(0..=max_deg);
        let exps: Vec<u32> = (0..n)
            .map(|_| {
                let e = rng.gen_range(0..=left);
                left -= e;
                e
            })
            .collect();
        (q(rng.gen_range(-bound..=bound)), Monomial::new(exps))
    });
    Polynomial::from_terms(ring, terms.collect::<Vec<_>>())
}

pub fn random_matrix(rng: &mut impl Rng, ring: &Arc<Ring>, rows: usize, cols: usize, max_deg: u32) -> PolyMatrix {
    let entries = (0..rows).map(|_| (0..cols).map(|_| random_poly(rng, ring, 2, max_deg, 3)).collect()).collect();
    PolyMatrix::from_rows(ring, cols, entries).unwrap()
}

/// Product of elementary operations `row_j += f * row_i` and swaps; its
/// determinant is `±1`.
pub fn random_unimodular(rng: &mut impl Rng, ring: &Arc<Ring>, n: usize, steps: usize) -> PolyMatrix {
    let mut m = PolyMatrix::identity(ring, n);
    if n < 2 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let mut e = PolyMatrix::identity(ring, n);
        let mut rows: Vec<Vec<Polynomial>> = e.rows().iter().map(|r| r.components().to_vec()).collect();
        if rng.gen_bool(0.2) {
            rows.swap(i, j);
        } else {
            rows[j][i] = random_poly(rng, ring, 2, 1, 2);
        }
        e = PolyMatrix::from_rows(ring, n, rows).unwrap();
        m = e.try_mul(&m).unwrap();
    }
    m
}

fn columns_module(s: &PolyMatrix) -> Submodule {
    Submodule::generate(s.ring(), s.nrows(), &s.columns()).unwrap()
}

pub fn check_gb_idempotent(a: &PolyMatrix) -> Result<(), String> {
    let m = row_module(a).unwrap();
    let again = Submodule::generate(a.ring(), a.ncols(), m.generators()).unwrap();
    if again != m {
        return Err(format!("reduced basis not idempotent for\n{a}"));
    }
    Ok(())
}

pub fn check_as_zero(a: &PolyMatrix) -> Result<(), String> {
    let s = syzygy_matrix(a);
    if !a.try_mul(&s).unwrap().is_zero() {
        return Err(format!("A*S != 0 for\n{a}"));
    }
    Ok(())
}

pub fn check_fitting_chain(a: &PolyMatrix) -> Result<(), String> {
    let f = fitting_ideals(a).unwrap();
    for w in f.ideals.windows(2) {
        if !w[0].contains_ideal(&w[1]).unwrap() {
            return Err(format!("Fitting chain broken for\n{a}"));
        }
    }
    Ok(())
}

pub fn check_fitting_invariance(a: &PolyMatrix, u: &PolyMatrix, v: &PolyMatrix) -> Result<(), String> {
    let b = u.try_mul(a).unwrap().try_mul(v).unwrap();
    let (fa, fb) = (fitting_ideals(a).unwrap(), fitting_ideals(&b).unwrap());
    for (j, (x, y)) in fa.ideals.iter().zip(&fb.ideals).enumerate() {
        if !module_equal(x.module(), y.module()).unwrap() {
            return Err(format!("I_{} differs after a unimodular change for\n{a}", j + 1));
        }
    }
    Ok(())
}

/// `(M : g^∞) : g = M : g^∞`.
pub fn check_saturation_absorption(a: &PolyMatrix, g: &Polynomial) -> Result<(), String> {
    if g.is_zero() {
        return Ok(());
    }
    let m = row_module(a).unwrap();
    let (sat, _) = saturate(&m, g).unwrap();
    let (again, steps) = saturate(&sat, g).unwrap();
    if steps != 0 || !module_equal(&again, &sat).unwrap() || !sat.contains_module(&m).unwrap() {
        return Err(format!("saturation by {g} does not absorb for\n{a}"));
    }
    Ok(())
}

pub fn check_tf_idempotent(a: &PolyMatrix) -> Result<(), String> {
    let closure = tf_closure(a).unwrap();
    let a_c = PolyMatrix::from_row_elements(a.ring(), a.ncols(), closure.generators()).unwrap();
    if !module_equal(&tf_closure(&a_c).unwrap(), &closure).unwrap()
        || !closure.contains_module(&row_module(a).unwrap()).unwrap()
    {
        return Err(format!("torsion-free closure not idempotent for\n{a}"));
    }
    Ok(())
}

/// Every kernel vector of `A` with entries of degree `<= degree`, found by
/// linear algebra on coefficients, lies in the column module of `S`.
pub fn check_syzygy_complete(a: &PolyMatrix, degree: u32) -> Result<(), String> {
    let ring = a.ring();
    let n = ring.nvars();
    let k = a.ncols();
    let monomials = monomials_up_to(n, degree);
    let unknowns: Vec<(usize, &Monomial)> = (0..k).flat_map(|j| monomials.iter().map(move |m| (j, m))).collect();
    let mut equations: Vec<(usize, Monomial)> = Vec::new();
    let mut columns: Vec<Vec<(usize, Rational)>> = Vec::new();
    for (j, m) in &unknowns {
        let mut col = Vec::new();
        for i in 0..a.nrows() {
            for (c, t) in a.get(i, *j).terms() {
                let key = (i, t.mul(m));
                let row = equations.iter().position(|e| *e == key).unwrap_or_else(|| {
                    equations.push(key.clone());
                    equations.len() - 1
                });
                col.push((row, c.clone()));
            }
        }
        columns.push(col);
    }
    let mut entries = vec![vec![GaussianRational::zero(); unknowns.len()]; equations.len()];
    for (u, col) in columns.iter().enumerate() {
        for (row, c) in col {
            entries[*row][u] = &entries[*row][u] + &GaussianRational::real(c.clone());
        }
    }
    let kernel = EvaluatedMatrix::new(entries, unknowns.len()).kernel;
    let s_module = columns_module(&syzygy_matrix(a));
    for v in kernel {
        let mut comps = vec![Vec::new(); k];
        for ((j, m), c) in unknowns.iter().zip(&v) {
            if !c.is_zero() {
                comps[*j].push((c.re.clone(), (*m).clone()));
            }
        }
        let e = ModuleElement::new(comps.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect()).unwrap();
        if !s_module.contains(&e).unwrap() {
            return Err(format!("kernel vector {e} of degree <= {degree} missing from im S for\n{a}"));
        }
    }
    Ok(())
}

fn monomials_up_to(n: usize, degree: u32) -> Vec<Monomial> {
    fn go(prefix: &mut Vec<u32>, n: usize, left: u32, out: &mut Vec<Monomial>) {
        if prefix.len() == n {
            out.push(Monomial::new(prefix.iter().copied()));
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            go(prefix, n, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, degree, &mut out);
    out
}

pub fn check_decomposition(a: &PolyMatrix) -> Result<(), String> {
    let d = decompose(a).map_err(|e| format!("{e} for\n{a}"))?;
    if !d.is_valid() {
        return Err(format!("failed {:?} for\n{a}", d.failed_checks()));
    }
    Ok(())
}

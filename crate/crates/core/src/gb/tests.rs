use std::sync::Arc;

use super::*;
use crate::poly::{parse_poly, Ring};

fn ring(vars: &[&str]) -> Arc<Ring> {
    Ring::new(vars.iter().copied()).unwrap()
}

fn elem(r: &Arc<Ring>, comps: &[&str]) -> ModuleElement {
    ModuleElement::new(comps.iter().map(|s| parse_poly(s, r).unwrap()).collect()).unwrap()
}

fn gb(r: &Arc<Ring>, rank: usize, gens: &[&[&str]]) -> Submodule {
    let gens: Vec<ModuleElement> = gens.iter().map(|g| elem(r, g)).collect();
    Submodule::generate(r, rank, &gens).unwrap()
}

fn strings(m: &Submodule) -> Vec<String> {
    m.generators().iter().map(ToString::to_string).collect()
}

#[test]
fn ideal_already_reduced() {
    let r = ring(&["x1", "x2"]);
    let m = gb(&r, 1, &[&["x1"], &["x2"]]);
    assert_eq!(strings(&m), vec!["(x1)", "(x2)"]);
}

#[test]
fn laplace_and_wave_give_squares() {
    let r = ring(&["x", "y"]);
    let m = gb(&r, 1, &[&["x^2+y^2"], &["x^2-y^2"]]);
    assert_eq!(strings(&m), vec!["(x^2)", "(y^2)"]);
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x", "y"]);
    let m = gb(&r, 2, &[&["x", "y"]]);
    let v = elem(&r, &["x^3", "x^2*y"]);
    assert!(m.normal_form(&v).unwrap().is_zero());
    let e1 = ModuleElement::unit(&r, 2, 0);
    assert_eq!(m.normal_form(&e1).unwrap(), e1);
    assert!(!member(&e1, &m).unwrap());
    for g in m.generators() {
        assert!(member(g, &m).unwrap());
    }
    // remainder is congruent to the input
    let w = elem(&r, &["x^2+y", "3*x*y-1"]);
    let nf = normal_form(&w, &m).unwrap();
    assert!(m.contains(&w.try_sub(&nf).unwrap()).unwrap());
}

#[test]
fn rank_mismatch_is_rejected() {
    let r = ring(&["x", "y"]);
    let m = gb(&r, 2, &[&["x", "y"]]);
    assert!(m.normal_form(&elem(&r, &["x"])).is_err());
    let bad = vec![elem(&r, &["x"]), elem(&r, &["x", "y"])];
    assert!(Submodule::generate(&r, 1, &bad).is_err());
}

#[test]
fn rows_of_a8_contain_products() {
    let r = ring(&["x1", "x2"]);
    let m = gb(&r, 2, &[&["x1", "0"], &["0", "x2"], &["x2", "x1"]]);
    for v in [["x1*x2", "0"], ["0", "x1*x2"], ["x1^2", "0"], ["x2^2", "0"], ["0", "x1^2"]] {
        assert!(m.contains(&elem(&r, &v)).unwrap(), "{v:?}");
    }
    assert!(!m.contains(&elem(&r, &["x1", "x1"])).unwrap());
}

#[test]
fn cubic_multiple_membership() {
    let r = ring(&["x", "y"]);
    let m = gb(&r, 2, &[&["x*(x^2+y^2)", "y*(x^2+y^2)"]]);
    assert!(!m.contains(&elem(&r, &["x", "y"])).unwrap());
    assert!(m.contains(&elem(&r, &["x^3+x*y^2", "x^2*y+y^3"])).unwrap());
}

#[test]
fn criteria_do_not_change_the_basis() {
    let r = ring(&["x", "y", "z"]);
    let gens: Vec<ModuleElement> =
        [["x^2-y*z", "y", "0"], ["x*y", "z^2", "x"], ["z", "x*z-y", "y^2"], ["0", "x", "y+z"]]
            .iter()
            .map(|g| elem(&r, g))
            .collect();
    let order = ModuleOrder::pot(r.order());
    let with = buchberger_with(&r, 3, &gens, order, BuchbergerOptions { criteria: true }).unwrap();
    let without = buchberger_with(&r, 3, &gens, order, BuchbergerOptions { criteria: false }).unwrap();
    assert_eq!(with, without);
    let top = ModuleOrder::top(r.order());
    let a = buchberger_with(&r, 3, &gens, top, BuchbergerOptions { criteria: true }).unwrap();
    let b = buchberger_with(&r, 3, &gens, top, BuchbergerOptions { criteria: false }).unwrap();
    assert_eq!(a, b);
}

#[test]
fn idempotent() {
    let r = ring(&["x", "y"]);
    let m = gb(&r, 2, &[&["x^2", "y"], &["x*y", "x+y^2"], &["y^3", "1"]]);
    let again = Submodule::generate(&r, 2, m.generators()).unwrap();
    assert_eq!(m, again);
}

#[test]
fn syzygy_of_identity_is_empty() {
    let r = ring(&["x"]);
    let s = syzygy_matrix(&PolyMatrix::identity(&r, 3));
    assert_eq!((s.nrows(), s.ncols()), (3, 0));
}

#[test]
fn syzygy_of_gradient_row() {
    let r = ring(&["x", "y"]);
    let a = PolyMatrix::parse(&r, &[vec!["x*(x^2+y^2)", "y*(x^2+y^2)"]]).unwrap();
    let s = syzygy_matrix(&a);
    assert_eq!(s.to_strings(), vec![vec!["y".to_string()], vec!["-x".to_string()]]);
}

#[test]
fn syzygy_of_zero_matrix_is_identity() {
    let r = ring(&["x"]);
    let s = syzygy_matrix(&PolyMatrix::zeros(&r, 1, 1));
    assert_eq!(s, PolyMatrix::identity(&r, 1));
}

#[test]
fn syzygy_of_curl_of_squares() {
    let r = ring(&["x", "y", "z"]);
    let a =
        PolyMatrix::parse(&r, &[vec!["0", "-z^2", "y^2"], vec!["-z^2", "0", "x^2"], vec!["-y^2", "x^2", "0"]]).unwrap();
    let s = syzygy_matrix(&a);
    assert!(a.try_mul(&s).unwrap().is_zero());
    let got = Submodule::generate(&r, 3, &s.columns()).unwrap();
    let expected = gb(&r, 3, &[&["x^2", "y^2", "z^2"]]);
    assert_eq!(got, expected);
}

#[test]
fn euler_syzygies_match_printed_matrix() {
    let r = ring(&["x1", "x2", "x3"]);
    let a = PolyMatrix::parse(
        &r,
        &[vec!["x1", "0", "x2", "x3", "x2"], vec!["0", "x1", "-x3", "x2", "x3"], vec!["x2", "x3", "0", "0", "0"]],
    )
    .unwrap();
    let printed = PolyMatrix::parse(
        &r,
        &[
            vec!["x2*x3", "0", "x3^2"],
            vec!["-x2^2", "0", "-x2*x3"],
            vec!["-x1*x3", "-x2^2+x3^2", "-x1*x2"],
            vec!["x1*x2", "-2*x2*x3", "-x1*x3"],
            vec!["-x1*x3", "x2^2+x3^2", "x1*x2"],
        ],
    )
    .unwrap();
    assert!(a.try_mul(&printed).unwrap().is_zero());
    let s = syzygy_matrix(&a);
    assert!(a.try_mul(&s).unwrap().is_zero());
    let got = Submodule::generate(&r, 5, &s.columns()).unwrap();
    let expected = Submodule::generate(&r, 5, &printed.columns()).unwrap();
    assert_eq!(got, expected);
}

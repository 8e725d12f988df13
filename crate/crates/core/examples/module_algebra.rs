//! Intersections, colon ideals, saturation and the torsion-free closure.

use syzkit::module_ops::{colon_ideal, intersect_modules, saturate, tf_closure, Ideal};
use syzkit::{parse_poly, ModuleElement, PolyMatrix, Ring, Submodule};

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run() -> Res {
    let r = Ring::new(["x", "y"])?;
    let p = |s: &str| parse_poly(s, &r);

    let meet = Ideal::generate(&r, &[p("x")?])?.intersect(&Ideal::generate(&r, &[p("y")?])?)?;
    println!("(x) ∩ (y) = {meet}");

    let m = Submodule::generate(&r, 2, &[ModuleElement::new(vec![p("x*(x^2+y^2)")?, p("y*(x^2+y^2)")?])?])?;
    let v = ModuleElement::new(vec![p("x")?, p("y")?])?;
    println!("(M : {v}) = {}", colon_ideal(&m, &v)?);

    let i = Submodule::generate(&r, 1, &[ModuleElement::new(vec![p("x^2*y")?])?])?;
    let (sat, steps) = saturate(&i, &p("x")?)?;
    println!("(x^2 y) : x^∞ = {}, stabilises after {steps} steps", Ideal::from_module(sat)?);

    let a = PolyMatrix::parse(&r, &[vec!["x*(x^2+y^2)", "y*(x^2+y^2)"]])?;
    let closure = tf_closure(&a)?;
    let gens: Vec<String> = closure.generators().iter().map(ToString::to_string).collect();
    println!("torsion-free closure of span{{{}}}: span{{{}}}", a.row(0), gens.join(", "));

    let both = intersect_modules(&closure, &m)?;
    println!("closure ∩ M has {} generator(s)", both.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run()
}

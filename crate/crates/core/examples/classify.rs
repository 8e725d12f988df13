//! Classification table for the eight small operators of the corpus.

use syzkit::classify::{classify, ClassifyOptions};
use syzkit::corpus::load_fixture;
use syzkit::rank::ComplexVerdict;

type Res = Result<(), Box<dyn std::error::Error>>;

fn yes_no(v: &Option<ComplexVerdict>) -> &'static str {
    match v {
        Some(v) if v.holds => "yes",
        Some(_) => "no",
        None => "n/a",
    }
}

pub fn run() -> Res {
    println!("{:<4} {:>4}  {:<6} {:<6} {:<22} {:<22} controllability", "op", "rank", "C-ell", "C-CR", "R-ell", "R-CR");
    for name in ["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"] {
        let fx = load_fixture(name)?;
        let opts = ClassifyOptions { points: fx.points.clone(), samples: 50, seed: 1 };
        let r = classify(&fx.matrix, &opts)?;
        let label = |v: &Option<syzkit::rank::RealVerdict>| v.as_ref().map_or("n/a", |v| v.label());
        println!(
            "{:<4} {:>4}  {:<6} {:<6} {:<22} {:<22} {:?}",
            name,
            r.generic_rank,
            yes_no(&r.c_elliptic),
            yes_no(&r.c_constant_rank),
            label(&r.r_elliptic),
            label(&r.r_constant_rank),
            r.controllability.verdict
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run()
}

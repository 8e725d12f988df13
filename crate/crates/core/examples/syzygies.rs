//! Syzygy matrix of the linearised Euler operator, checked against a
//! hand-written generating set.

use syzkit::module_ops::module_equal;
use syzkit::{syzygy_matrix, PolyMatrix, Ring, Submodule};

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run() -> Res {
    let ring = Ring::new(["x1", "x2", "x3"])?;
    let a = PolyMatrix::parse(
        &ring,
        &[vec!["x1", "0", "x2", "x3", "x2"], vec!["0", "x1", "-x3", "x2", "x3"], vec!["x2", "x3", "0", "0", "0"]],
    )?;
    let s = syzygy_matrix(&a);
    println!("A =\n{a}\nS ({}x{}) =\n{s}", s.nrows(), s.ncols());
    assert!(a.try_mul(&s)?.is_zero());

    let known = PolyMatrix::parse(
        &ring,
        &[
            vec!["x2*x3", "0", "x3^2"],
            vec!["-x2^2", "0", "-x2*x3"],
            vec!["-x1*x3", "-x2^2+x3^2", "-x1*x2"],
            vec!["x1*x2", "-2*x2*x3", "-x1*x3"],
            vec!["-x1*x3", "x2^2+x3^2", "x1*x2"],
        ],
    )?;
    let ours = Submodule::generate(&ring, 5, &s.columns())?;
    let theirs = Submodule::generate(&ring, 5, &known.columns())?;
    println!("same syzygy module as the hand-written S: {}", module_equal(&ours, &theirs)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run()
}

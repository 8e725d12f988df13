//! Controllable–uncontrollable decomposition of two operators: the gradient
//! times the Laplacian, and the Euler operator with scaled rows, whose
//! uncontrollable part is complex elliptic.

use syzkit::corpus::load_fixture;
use syzkit::decompose::decompose;
use syzkit::rank::is_c_elliptic;

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run() -> Res {
    for name in ["laplace-times-grad", "euler-scaled-b"] {
        let a = load_fixture(name)?.matrix;
        let d = decompose(&a)?;
        println!("== {name} ({}x{})", a.nrows(), a.ncols());
        println!("A_c =\n{}", d.a_c);
        println!("A_u: {}x{}, conductor {} with exponent {}", d.a_u.nrows(), d.a_u.ncols(), d.conductor, d.exponent);
        for c in &d.checks {
            println!("  {:<26} {}", c.name, if c.passed { "pass" } else { "FAIL" });
        }
        println!("A_u complex elliptic: {}", is_c_elliptic(&d.a_u)?.holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run()
}

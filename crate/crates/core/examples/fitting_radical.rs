//! Fitting ideals of the curl operator and the radical membership tests
//! behind its complex constant-rank verdict.

use syzkit::rank::{fitting_ideals, membership_exponent, radical_membership};
use syzkit::{PolyMatrix, Polynomial, Ring};

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run() -> Res {
    let ring = Ring::new(["x1", "x2", "x3"])?;
    let curl = PolyMatrix::parse(&ring, &[vec!["0", "x3", "-x2"], vec!["-x3", "0", "x1"], vec!["x2", "-x1", "0"]])?;
    let f = fitting_ideals(&curl)?;
    for (j, ideal) in f.ideals.iter().enumerate() {
        println!("I_{}(curl) = {ideal}", j + 1);
    }
    println!(
        "generic rank {}, first nonzero Fitting ideal I_{} = Fitt_{}(M)",
        f.generic_rank, f.first_nonzero_size, f.module_index
    );
    let i2 = f.first_nonzero(&ring);
    for (k, name) in ring.variables().iter().enumerate() {
        let x = Polynomial::var(&ring, k);
        let inside = radical_membership(&x, &i2)?;
        let s = membership_exponent(&x, &i2, 8)?;
        println!("{name} in sqrt(I_2): {inside}  (least power in I_2: {s:?})");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run()
}

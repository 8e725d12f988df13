//! `ker A(ξ)` against `im S(ξ)` for the Euler operator: equal where the rank
//! is maximal, strictly larger where it drops.

use syzkit::corpus::load_fixture;
use syzkit::rank::pointwise_exactness_all;
use syzkit::{syzygy_matrix, GaussianRational};

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run() -> Res {
    let a = load_fixture("euler")?.matrix;
    let s = syzygy_matrix(&a);
    let points: Vec<Vec<GaussianRational>> = ["0,1,0", "1,0,0", "2,-1,3", "1,i,0"]
        .iter()
        .map(|p| p.split(',').map(str::parse).collect())
        .collect::<Result<_, _>>()?;
    for c in pointwise_exactness_all(&a, &s, &points)? {
        let pt: Vec<String> = c.point.iter().map(ToString::to_string).collect();
        println!(
            "ξ = {:<11} rank {}  dim ker A {}  dim im S {}  {:?}  conforms {}",
            format!("({})", pt.join(", ")),
            c.rank_a,
            c.dim_ker_a,
            c.dim_im_s,
            c.relation,
            c.conforms
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run()
}

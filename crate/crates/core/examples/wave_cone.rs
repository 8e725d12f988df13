//! Wave-cone spans: the linear span of all values `S(ξ)`.

use syzkit::poly::format_rational;
use syzkit::rank::wave_cone_span;
use syzkit::{syzygy_matrix, PolyMatrix, Ring};

type Res = Result<(), Box<dyn std::error::Error>>;

fn show(label: &str, s: &PolyMatrix) {
    let span = wave_cone_span(s);
    let rows: Vec<String> =
        span.iter().map(|v| format!("({})", v.iter().map(format_rational).collect::<Vec<_>>().join(", "))).collect();
    println!("{label}: dim {} basis [{}]", span.len(), rows.join(", "));
}

pub fn run() -> Res {
    let r2 = Ring::new(["x", "y"])?;
    let a = PolyMatrix::parse(&r2, &[vec!["x*(x^2+y^2)", "y*(x^2+y^2)"]])?;
    show("S of x(x^2+y^2)", &syzygy_matrix(&a));

    let r3 = Ring::new(["x", "y", "z"])?;
    show("(x^2; y^2; z^2)", &PolyMatrix::parse(&r3, &[vec!["x^2"], vec!["y^2"], vec!["z^2"]])?);
    show("(x+y; x+y)", &PolyMatrix::parse(&r3, &[vec!["x+y"], vec!["x+y"]])?);
    show("empty", &PolyMatrix::zeros(&r3, 3, 0));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run()
}

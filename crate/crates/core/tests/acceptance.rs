//! Acceptance suite: one PASS/FAIL line per criterion, each with its time
//! bound. Runs without the test harness so the lines are always printed;
//! exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use syzkit::classify::{classify, ClassifyOptions};
use syzkit::corpus::{load_all, load_fixture, Fixture};
use syzkit::decompose::{classify_controllability, decompose, Controllability};
use syzkit::module_ops::{module_equal, row_module};
use syzkit::rank::{
    evaluate_matrix, fitting_ideal, generic_rank, is_c_elliptic, pointwise_exactness, radical_membership,
    sample_points, Certificate, RealVerdict, Relation,
};
use syzkit::{parse_poly, syzygy_matrix, GaussianRational, ModuleElement, PolyMatrix, Polynomial, Ring, Submodule};

type Outcome = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn pt(coords: &[&str]) -> Vec<GaussianRational> {
    coords.iter().map(|c| c.parse().unwrap()).collect()
}

fn fixture(name: &str) -> Fixture {
    load_fixture(name).unwrap()
}

fn opts(fx: &Fixture) -> ClassifyOptions {
    ClassifyOptions { points: fx.points.clone(), samples: 50, seed: 1 }
}

fn span(a: &PolyMatrix, cols: &[&[&str]]) -> Submodule {
    let gens: Vec<ModuleElement> = cols
        .iter()
        .map(|c| ModuleElement::new(c.iter().map(|s| parse_poly(s, a.ring()).unwrap()).collect()).unwrap())
        .collect();
    Submodule::generate(a.ring(), gens[0].rank(), &gens).unwrap()
}

fn column_module(s: &PolyMatrix) -> Submodule {
    Submodule::generate(s.ring(), s.nrows(), &s.columns()).unwrap()
}

fn classification_table() -> Outcome {
    let refuted_at = |v: &Option<RealVerdict>, p: &[GaussianRational]| matches!(v, Some(RealVerdict::Refuted { point, .. }) if point == p);
    for name in ["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"] {
        let start = Instant::now();
        let fx = fixture(name);
        let r = classify(&fx.matrix, &opts(&fx)).map_err(|e| e.to_string())?;
        let ce = r.c_elliptic.as_ref().unwrap();
        let cc = r.c_constant_rank.as_ref().unwrap();
        let ok = match name {
            "a1" => refuted_at(&r.r_constant_rank, &pt(&["1", "0"])),
            "a2" => matches!(r.r_constant_rank, Some(RealVerdict::Refuted { .. })),
            "a3" => !ce.holds && ce.certificate == Certificate::Point { point: pt(&["1", "i"]), rank: 0 } && !cc.holds,
            "a4" => !cc.holds && !matches!(r.r_constant_rank, Some(RealVerdict::Refuted { .. })),
            "a5" => cc.holds && !ce.holds,
            _ => ce.holds,
        };
        ensure(ok, || format!("{name}: unexpected classification {r:?}"))?;
        ensure(start.elapsed() < Duration::from_secs(10), || format!("{name} took {:?}", start.elapsed()))?;
    }
    Ok(())
}

fn euler() -> Outcome {
    let a = fixture("euler").matrix;
    ensure(generic_rank(&a) == 3, || "generic rank".into())?;
    let printed = span(
        &a,
        &[
            &["x2*x3", "-x2^2", "-x1*x3", "x1*x2", "-x1*x3"],
            &["0", "0", "-x2^2+x3^2", "-2*x2*x3", "x2^2+x3^2"],
            &["x3^2", "-x2*x3", "-x1*x2", "-x1*x3", "x1*x2"],
        ],
    );
    let s = syzygy_matrix(&a);
    ensure(module_equal(&column_module(&s), &printed).unwrap(), || format!("syzygies differ:\n{s}"))?;
    let v = classify_controllability(&a).unwrap();
    ensure(v.verdict == Controllability::Controllable, || format!("{v:?}"))?;
    let c = pointwise_exactness(&a, &s, &pt(&["0", "1", "0"])).unwrap();
    ensure(c.relation == Relation::Equal && c.dim_ker_a == 2, || format!("{c:?}"))?;
    let c = pointwise_exactness(&a, &s, &pt(&["1", "0", "0"])).unwrap();
    ensure(c.relation == Relation::StrictSuperset && c.dim_ker_a == 3 && c.dim_im_s == 0, || format!("{c:?}"))
}

fn primary_decomposition_example() -> Outcome {
    let a = fixture("primary-decomp").matrix;
    let d = decompose(&a).map_err(|e| e.to_string())?;
    let s_c = syzygy_matrix(&d.a_c);
    ensure(module_equal(&column_module(&s_c), &span(&a, &[&["x^2", "y^2", "z^2"]])).unwrap(), || {
        format!("syzygies of A_c:\n{s_c}")
    })?;
    let v = classify_controllability(&a).unwrap();
    ensure(v.verdict == Controllability::Mixed, || format!("{v:?}"))?;
    let x = parse_poly("x", a.ring()).unwrap();
    let ideal_x = syzkit::module_ops::Ideal::generate(a.ring(), std::slice::from_ref(&x)).unwrap();
    ensure(radical_membership(&x, &d.conductor).unwrap(), || format!("x not in sqrt{}", d.conductor))?;
    ensure(ideal_x.contains_ideal(&d.conductor).unwrap(), || format!("{} not inside (x)", d.conductor))
}

fn laplace_times_gradient() -> Outcome {
    let a = fixture("laplace-times-grad").matrix;
    let d = decompose(&a).map_err(|e| e.to_string())?;
    ensure(module_equal(&row_module(&d.a_c).unwrap(), &span(&a, &[&["x", "y"]])).unwrap(), || {
        format!("A_c:\n{}", d.a_c)
    })?;
    ensure(module_equal(&column_module(&d.s), &span(&a, &[&["y", "-x"]])).unwrap(), || format!("S:\n{}", d.s))?;
    ensure(d.conductor.to_string() == "(x^2+y^2)" && d.exponent == 1, || format!("{} {}", d.conductor, d.exponent))?;
    ensure(d.is_valid(), || format!("failed {:?}", d.failed_checks()))?;
    let mut points = vec![pt(&["1", "0"]), pt(&["0", "1"]), pt(&["1", "1"]), pt(&["3", "7"])];
    points.extend(sample_points(2, 100, 2024));
    for p in points {
        let dim = evaluate_matrix(&d.a_u, &p).unwrap().kernel_dim();
        ensure(dim == 0, || format!("ker A_u nonzero at {p:?}"))?;
    }
    Ok(())
}

fn wave_times_gradient() -> Outcome {
    let a = fixture("wave-times-grad").matrix;
    let d = decompose(&a).map_err(|e| e.to_string())?;
    ensure(d.is_valid(), || format!("failed {:?}", d.failed_checks()))?;
    ensure(evaluate_matrix(&d.a_u, &pt(&["1", "1"])).unwrap().kernel_dim() > 0, || "ker A_u(1,1) = 0".into())
}

/// Besides the library verdict, certifies `x_i in sqrt(I_k(A_u))` literally:
/// the rows of `A_u` with a single entry `x_i^2` form a submatrix whose
/// `k x k` minors lie in `I_k(A_u)`.
fn scaled_euler() -> Outcome {
    let a = fixture("euler-scaled-b").matrix;
    let d = decompose(&a).map_err(|e| e.to_string())?;
    ensure(d.is_valid(), || format!("failed {:?}", d.failed_checks()))?;
    let v = is_c_elliptic(&d.a_u).map_err(|e| e.to_string())?;
    ensure(v.holds, || format!("A_u not C-elliptic: {v:?}"))?;
    let ring = a.ring();
    let squares: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var(ring, i).pow(2)).collect();
    let rows: Vec<usize> = (0..d.a_u.nrows())
        .filter(|&i| {
            let nonzero: Vec<&Polynomial> =
                (0..d.a_u.ncols()).map(|j| d.a_u.get(i, j)).filter(|p| !p.is_zero()).collect();
            nonzero.len() == 1 && squares.contains(nonzero[0])
        })
        .collect();
    let sub = d.a_u.submatrix(&rows, &(0..d.a_u.ncols()).collect::<Vec<_>>());
    let ik = fitting_ideal(&sub, d.a_u.ncols()).unwrap();
    for i in 0..ring.nvars() {
        let x = Polynomial::var(ring, i);
        ensure(radical_membership(&x, &ik).unwrap(), || format!("{x} not certified in sqrt(I_k(A_u))"))?;
    }
    Ok(())
}

fn controllable_without_constant_rank() -> Outcome {
    let a = fixture("ctrl-not-rcr").matrix;
    for (label, m) in [("A", a.clone()), ("A^T", a.transpose())] {
        let v = classify_controllability(&m).map_err(|e| e.to_string())?;
        ensure(v.verdict == Controllability::Controllable, || format!("{label}: {v:?}"))?;
    }
    let r = generic_rank(&a);
    let drop = evaluate_matrix(&a, &pt(&["1", "0", "0", "0"])).unwrap().rank;
    ensure(drop < r, || format!("rank {drop} at the witness, generic {r}"))
}

fn conformance_suite() -> Outcome {
    let mut violations = Vec::new();
    for fx in load_all().map_err(|e| e.to_string())? {
        let a = &fx.matrix;
        let d = decompose(a).map_err(|e| e.to_string())?;
        if !d.is_valid() {
            violations.push(format!("{}: decomposition failed {:?}", fx.name, d.failed_checks()));
        }
        let r = generic_rank(a);
        let samples: Vec<_> = sample_points(a.ring().nvars(), 400, 8)
            .into_iter()
            .filter(|p| evaluate_matrix(a, p).unwrap().rank == r)
            .take(50)
            .collect();
        if samples.len() < 50 {
            violations.push(format!("{}: only {} maximal-rank samples", fx.name, samples.len()));
        }
        for (p, designated) in fx.points.iter().map(|p| (p, true)).chain(samples.iter().map(|p| (p, false))) {
            let c = pointwise_exactness(a, &d.s, p).unwrap();
            if c.rank_a == r {
                let ker_u = evaluate_matrix(&d.a_u, p).unwrap().kernel_dim();
                if c.relation != Relation::Equal || ker_u != 0 {
                    violations.push(format!("{} at {p:?}: {:?}, dim ker A_u {ker_u}", fx.name, c.relation));
                }
            } else if designated && c.relation != Relation::StrictSuperset {
                violations.push(format!("{} at rank-drop point {p:?}: {:?}", fx.name, c.relation));
            }
        }
    }
    ensure(violations.is_empty(), || violations.join("; "))
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let ring = Ring::new(["x", "y"]).unwrap();
    let ring3 = Ring::new(["x", "y", "z"]).unwrap();
    let random = |rng: &mut ChaCha8Rng, r: &std::sync::Arc<Ring>| {
        let (rows, cols) = (rand::Rng::gen_range(rng, 1..=3), rand::Rng::gen_range(rng, 1..=3));
        common::random_matrix(rng, r, rows, cols, 2)
    };
    for _ in 0..25 {
        common::check_gb_idempotent(&random(&mut rng, &ring))?;
    }
    for i in 0..100 {
        let r = if i % 2 == 0 { &ring } else { &ring3 };
        common::check_as_zero(&random(&mut rng, r))?;
    }
    let fixtures = load_all().map_err(|e| e.to_string())?;
    for fx in &fixtures {
        common::check_fitting_chain(&fx.matrix)?;
    }
    for name in ["a5", "a8", "laplace-times-grad", "a4"] {
        let a = fixture(name).matrix;
        for _ in 0..20 {
            let u = common::random_unimodular(&mut rng, a.ring(), a.nrows(), 3);
            let v = common::random_unimodular(&mut rng, a.ring(), a.ncols(), 3);
            common::check_fitting_invariance(&a, &u, &v)?;
        }
    }
    for _ in 0..25 {
        let a = random(&mut rng, &ring);
        let g = common::random_poly(&mut rng, &ring, 2, 1, 2);
        common::check_saturation_absorption(&a, &g)?;
        common::check_tf_idempotent(&a)?;
    }
    for fx in &fixtures {
        common::check_tf_idempotent(&fx.matrix)?;
    }
    for _ in 0..20 {
        common::check_syzygy_complete(&common::random_matrix(&mut rng, &ring, 2, 2, 2), 3)?;
    }
    for _ in 0..25 {
        common::check_decomposition(&random(&mut rng, &ring))?;
    }
    Ok(())
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 classification table a1-a8", 80, classification_table),
        ("2 Euler operator", 30, euler),
        ("3 primary decomposition example", 60, primary_decomposition_example),
        ("4 gradient times Laplacian", 30, laplace_times_gradient),
        ("5 gradient times wave operator", 30, wave_times_gradient),
        ("6 scaled Euler operator, elliptic A_u", 120, scaled_euler),
        ("7 controllable without constant rank", 600, controllable_without_constant_rank),
        ("8 theorem conformance over the corpus", 900, conformance_suite),
        ("9 property suites", 900, property_suites),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(limit), || format!("took {elapsed:?}, limit {limit}s"))
        });
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({:.3}s, limit {limit}s)", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({:.3}s, limit {limit}s): {why}", elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Command-line front end. [`run`] parses arguments, runs one analysis and
//! returns the exit code with the report text, so the binary stays a shim.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 a computed result
//! contradicts a theorem the tool checks (a conformance failure).

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::classify::{classify, ClassificationReport, ClassifyOptions};
use crate::corpus::{check_expectations, fixture_names, fixture_source, load_fixture, FieldCheck, Fixture};
use crate::decompose::{decompose, Check, ControllabilityVerdict, DecompositionResult};
use crate::document::{parse_point, InputDocument, SCHEMA};
use crate::error::{Error, Result};
use crate::gb::{syzygy_matrix, PolyMatrix};
use crate::poly::{format_rational, BaseOrder, GaussianRational};
use crate::rank::{
    compare_at, evaluate_matrix, generic_rank, sample_points, wave_cone_span, Certificate, ComplexVerdict, Homogeneity,
    IdealSource, RadicalWitness, RealVerdict, Relation,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CONFORMANCE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "syzkit",
    version,
    about = "Exact syzygies, decompositions and constant-rank analysis of PDE operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Syzygy matrix S with A S = 0, and the wave-cone span of S.
    Syzygy(Flags),
    /// Homogeneity, generic rank, complex/real ellipticity and constant rank, controllability.
    Classify(Flags),
    /// Controllable–uncontrollable decomposition with its verification checks.
    Decompose(Flags),
    /// Pointwise exactness ker A(ξ) = im S(ξ), and ker A_u(ξ) = 0 where the rank is maximal.
    Verify(Flags),
    /// List the built-in fixtures, or check a fixture or document against its `expected` block.
    Fixture(Flags),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Args, Debug)]
struct Flags {
    /// Input document (`syzkit/1` JSON).
    #[arg(long, conflicts_with = "fixture")]
    input: Option<PathBuf>,
    /// Built-in fixture name.
    #[arg(long)]
    fixture: Option<String>,
    /// Evaluation point "c1,...,cn"; coordinates may be `a+b*i`. Repeatable;
    /// replaces the points of the input document.
    #[arg(long = "point", allow_hyphen_values = true)]
    points: Vec<String>,
    /// Seed for random sample points; defaults to the document's seed, else 1.
    #[arg(long)]
    seed: Option<u64>,
    /// Samples for the real semi-decisions; for `verify`, extra random points (default 0).
    #[arg(long)]
    samples: Option<usize>,
    /// Base monomial order of the polynomial ring.
    #[arg(long, value_enum, default_value = "grevlex")]
    order: OrderArg,
    /// Write the report to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include wall-clock time in the report; the report is then no longer reproducible.
    #[arg(long)]
    timing: bool,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text },
            };
        }
    };
    let (name, flags) = match &cli.command {
        Command::Syzygy(f) => ("syzygy", f),
        Command::Classify(f) => ("classify", f),
        Command::Decompose(f) => ("decompose", f),
        Command::Verify(f) => ("verify", f),
        Command::Fixture(f) => ("fixture", f),
    };
    match execute(name, flags) {
        Ok((report, conforms)) => {
            let code = if conforms { EXIT_OK } else { EXIT_CONFORMANCE };
            let mut text = serde_json::to_string_pretty(&report).expect("reports always serialize");
            text.push('\n');
            match &flags.output {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Outcome {
                        code: EXIT_INPUT,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    },
                },
                None => Outcome { code, stdout: text, stderr: String::new() },
            }
        }
        Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

#[derive(Serialize)]
struct Report {
    schema: &'static str,
    tool_version: &'static str,
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    input_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<InputSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixtures: Option<Vec<&'static str>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    syzygy: Option<SyzygyOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<ClassificationOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<DecompositionOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    evaluations: Option<Vec<EvalOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixture_checks: Option<Vec<FieldCheck>>,
    conformance: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

impl Report {
    fn new(command: &'static str) -> Report {
        Report {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
            input_digest: None,
            input: None,
            fixtures: None,
            syzygy: None,
            classification: None,
            decomposition: None,
            evaluations: None,
            fixture_checks: None,
            conformance: true,
            timing_ms: None,
        }
    }
}

#[derive(Serialize)]
struct InputSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    variables: Vec<String>,
    order: &'static str,
    rows: usize,
    cols: usize,
    matrix: Vec<Vec<String>>,
    seed: u64,
    samples: usize,
}

#[derive(Serialize)]
struct SyzygyOut {
    rows: usize,
    cols: usize,
    matrix: Vec<Vec<String>>,
    wave_cone_span: Vec<Vec<String>>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum CertificateOut {
    Radical { ideal: IdealSource, witnesses: Vec<RadicalWitness> },
    Point { point: Vec<String>, rank: usize },
    NotInRadical { ideal: IdealSource, variable: String },
    Vacuous,
}

#[derive(Serialize)]
struct ComplexOut {
    holds: bool,
    certificate: CertificateOut,
}

#[derive(Serialize)]
struct RealOut {
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
}

#[derive(Serialize)]
struct ClassificationOut {
    homogeneity: Homogeneity,
    /// Row and column homogeneity disagree, so the homogeneity assumption is ambiguous.
    homogeneity_ambiguous: bool,
    generic_rank: usize,
    c_elliptic: Option<ComplexOut>,
    c_constant_rank: Option<ComplexOut>,
    r_elliptic: Option<RealOut>,
    r_constant_rank: Option<RealOut>,
    controllability: ControllabilityVerdict,
}

#[derive(Serialize)]
struct DecompositionOut {
    a_c: Vec<Vec<String>>,
    a_u: Vec<Vec<String>>,
    s: Vec<Vec<String>>,
    conductor: Vec<String>,
    exponent: u32,
    checks: Vec<Check>,
    valid: bool,
}

#[derive(Serialize)]
struct EvalOut {
    point: Vec<String>,
    rank_a: usize,
    dim_ker_a: usize,
    dim_im_s: usize,
    relation: Relation,
    generic_rank: usize,
    dim_ker_a_u: usize,
    conforms: bool,
}

fn point_strings(p: &[GaussianRational]) -> Vec<String> {
    p.iter().map(ToString::to_string).collect()
}

fn complex_out(v: &ComplexVerdict) -> ComplexOut {
    let certificate = match &v.certificate {
        Certificate::Radical { ideal, witnesses } => {
            CertificateOut::Radical { ideal: *ideal, witnesses: witnesses.clone() }
        }
        Certificate::Point { point, rank } => CertificateOut::Point { point: point_strings(point), rank: *rank },
        Certificate::NotInRadical { ideal, variable } => {
            CertificateOut::NotInRadical { ideal: *ideal, variable: variable.clone() }
        }
        Certificate::Vacuous => CertificateOut::Vacuous,
    };
    ComplexOut { holds: v.holds, certificate }
}

fn real_out(v: &RealVerdict) -> RealOut {
    let mut out = RealOut { verdict: v.label(), point: None, rank: None, samples: None };
    match v {
        RealVerdict::Refuted { point, rank } => {
            out.point = Some(point_strings(point));
            out.rank = Some(*rank);
        }
        RealVerdict::Inconclusive { samples } => out.samples = Some(*samples),
        RealVerdict::CertifiedViaComplex => {}
    }
    out
}

fn classification_out(r: &ClassificationReport) -> ClassificationOut {
    ClassificationOut {
        homogeneity_ambiguous: r.homogeneity.row_homogeneous != r.homogeneity.column_homogeneous,
        homogeneity: r.homogeneity.clone(),
        generic_rank: r.generic_rank,
        c_elliptic: r.c_elliptic.as_ref().map(complex_out),
        c_constant_rank: r.c_constant_rank.as_ref().map(complex_out),
        r_elliptic: r.r_elliptic.as_ref().map(real_out),
        r_constant_rank: r.r_constant_rank.as_ref().map(real_out),
        controllability: r.controllability.clone(),
    }
}

fn decomposition_out(d: &DecompositionResult) -> DecompositionOut {
    DecompositionOut {
        a_c: d.a_c.to_strings(),
        a_u: d.a_u.to_strings(),
        s: d.s.to_strings(),
        conductor: d.conductor.generators().iter().map(ToString::to_string).collect(),
        exponent: d.exponent,
        checks: d.checks.clone(),
        valid: d.is_valid(),
    }
}

/// Loaded input: raw bytes for the digest, the document and the matrix.
struct Loaded {
    bytes: Vec<u8>,
    document: InputDocument,
    matrix: PolyMatrix,
    points: Vec<Vec<GaussianRational>>,
    seed: u64,
    samples: usize,
}

fn load(flags: &Flags, base: BaseOrder) -> Result<Loaded> {
    let bytes = match (&flags.input, &flags.fixture) {
        (Some(path), None) => {
            std::fs::read(path).map_err(|e| Error::Document(format!("cannot read {}: {e}", path.display())))?
        }
        (None, Some(name)) => fixture_source(name)?.as_bytes().to_vec(),
        _ => return Err(Error::Document("exactly one of --input or --fixture is required".into())),
    };
    let text = std::str::from_utf8(&bytes).map_err(|_| Error::Document("input is not UTF-8".into()))?;
    let document = InputDocument::from_json(text)?;
    let ring = document.ring(base)?;
    let matrix = document.matrix(&ring)?;
    // Points given on the command line replace the document's points.
    let points = if flags.points.is_empty() {
        document.points()?
    } else {
        flags
            .points
            .iter()
            .map(|p| parse_point(p, ring.nvars()).map_err(|e| Error::Document(format!("--point `{p}`: {e}"))))
            .collect::<Result<_>>()?
    };
    let seed = flags.seed.unwrap_or_else(|| document.seed());
    let samples = flags.samples.unwrap_or_else(|| document.samples());
    Ok(Loaded { bytes, document, matrix, points, seed, samples })
}

fn execute(command: &'static str, flags: &Flags) -> Result<(Report, bool)> {
    let start = Instant::now();
    let mut report = Report::new(command);
    if command == "fixture" && flags.fixture.is_none() && flags.input.is_none() {
        report.fixtures = Some(fixture_names());
        return Ok((report, true));
    }
    let base = match flags.order {
        OrderArg::Grevlex => BaseOrder::Grevlex,
        OrderArg::Lex => BaseOrder::Lex,
    };
    let input = load(flags, base)?;
    let a = &input.matrix;
    report.input_digest = Some(format!("{:x}", Sha256::digest(&input.bytes)));
    report.input = Some(InputSummary {
        name: input.document.name.clone(),
        variables: a.ring().variables().to_vec(),
        order: match base {
            BaseOrder::Grevlex => "grevlex",
            BaseOrder::Lex => "lex",
        },
        rows: a.nrows(),
        cols: a.ncols(),
        matrix: a.to_strings(),
        seed: input.seed,
        samples: input.samples,
    });

    let conforms = match command {
        "syzygy" => {
            let s = syzygy_matrix(a);
            let span = wave_cone_span(&s).iter().map(|v| v.iter().map(format_rational).collect()).collect();
            let ok = a.try_mul(&s)?.is_zero();
            report.syzygy =
                Some(SyzygyOut { rows: s.nrows(), cols: s.ncols(), matrix: s.to_strings(), wave_cone_span: span });
            ok
        }
        "classify" => {
            let opts = ClassifyOptions { points: input.points.clone(), samples: input.samples, seed: input.seed };
            let r = classify(a, &opts)?;
            report.classification = Some(classification_out(&r));
            r.is_consistent(a.ncols())
        }
        "decompose" => {
            let d = decompose(a)?;
            report.decomposition = Some(decomposition_out(&d));
            d.is_valid()
        }
        "verify" => {
            let d = decompose(a)?;
            let r = generic_rank(a);
            let mut points = input.points.clone();
            points.extend(sample_points(a.ring().nvars(), flags.samples.unwrap_or(0), input.seed));
            let mut evals = Vec::with_capacity(points.len());
            let mut ok = d.is_valid();
            for p in &points {
                let c = compare_at(a, &d.s, r, p)?;
                let dim_ker_a_u = evaluate_matrix(&d.a_u, p)?.kernel_dim();
                let conforms = c.conforms && (c.rank_a < r || dim_ker_a_u == 0);
                ok &= conforms;
                evals.push(EvalOut {
                    point: point_strings(p),
                    rank_a: c.rank_a,
                    dim_ker_a: c.dim_ker_a,
                    dim_im_s: c.dim_im_s,
                    relation: c.relation,
                    generic_rank: r,
                    dim_ker_a_u,
                    conforms,
                });
            }
            report.evaluations = Some(evals);
            ok
        }
        "fixture" => {
            let fx = match &flags.fixture {
                Some(name) => load_fixture(name)?,
                None => {
                    if input.document.expected.is_none() {
                        return Err(Error::Document("the document has no `expected` block to check".into()));
                    }
                    let text = std::str::from_utf8(&input.bytes).expect("checked in load");
                    Fixture::from_source(input.document.name.as_deref().unwrap_or("input"), text)?
                }
            };
            let checks = check_expectations(&fx)?;
            let ok = checks.iter().all(|c| c.passed);
            report.fixture_checks = Some(checks);
            ok
        }
        _ => unreachable!("clap restricts the command set"),
    };
    report.conformance = conforms;
    if flags.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    Ok((report, conforms))
}

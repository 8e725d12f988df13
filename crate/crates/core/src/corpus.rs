//! Built-in fixtures: the worked examples, stored as `syzkit/1` documents
//! with expected results and a note on where each expectation comes from.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, ClassifyOptions};
use crate::decompose::{classify_controllability, decompose, Controllability};
use crate::document::InputDocument;
use crate::error::{Error, Result};
use crate::gb::{PolyMatrix, Submodule};
use crate::module_ops::{module_equal, Ideal};
use crate::poly::{parse_poly, BaseOrder, GaussianRational};
use crate::rank::{is_c_elliptic, pointwise_exactness_all, RealVerdict, Relation};

const FIXTURES: &[(&str, &str)] = &[
    ("a1", include_str!("../fixtures/a1.json")),
    ("a2", include_str!("../fixtures/a2.json")),
    ("a3", include_str!("../fixtures/a3.json")),
    ("a4", include_str!("../fixtures/a4.json")),
    ("a5", include_str!("../fixtures/a5.json")),
    ("a6", include_str!("../fixtures/a6.json")),
    ("a7", include_str!("../fixtures/a7.json")),
    ("a8", include_str!("../fixtures/a8.json")),
    ("euler", include_str!("../fixtures/euler.json")),
    ("euler-scaled-b", include_str!("../fixtures/euler-scaled-b.json")),
    ("primary-decomp", include_str!("../fixtures/primary-decomp.json")),
    ("laplace-times-grad", include_str!("../fixtures/laplace-times-grad.json")),
    ("wave-times-grad", include_str!("../fixtures/wave-times-grad.json")),
    ("ctrl-not-rcr", include_str!("../fixtures/ctrl-not-rcr.json")),
    ("separate-convexity", include_str!("../fixtures/separate-convexity.json")),
];

/// Expected real verdict; `not_refuted` accepts either non-refuting outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedReal {
    Refuted,
    CertifiedViaComplex,
    Inconclusive,
    NotRefuted,
}

impl ExpectedReal {
    pub fn accepts(self, v: &RealVerdict) -> bool {
        match (self, v) {
            (ExpectedReal::Refuted, RealVerdict::Refuted { .. }) => true,
            (ExpectedReal::CertifiedViaComplex, RealVerdict::CertifiedViaComplex) => true,
            (ExpectedReal::Inconclusive, RealVerdict::Inconclusive { .. }) => true,
            (ExpectedReal::NotRefuted, v) => !matches!(v, RealVerdict::Refuted { .. }),
            _ => false,
        }
    }
}

/// Partial expected results. Every field present is checked by
/// [`check_expectations`]; `notes` records the source of each value.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generic_rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_homogeneous: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_elliptic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_constant_rank: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_elliptic: Option<ExpectedReal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_constant_rank: Option<ExpectedReal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub controllability: Option<Controllability>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transpose_controllability: Option<Controllability>,
    /// Rank of `A(ξ)` at each designated point.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point_ranks: Option<Vec<usize>>,
    /// `ker A(ξ)` against `im S(ξ)` at each designated point.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<Relation>>,
    /// Columns generating the syzygy module (compared as modules).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub syzygy: Option<Vec<Vec<String>>>,
    /// Generators of the conductor ideal (compared as ideals).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conductor: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u32>,
    /// Whether the constructed uncontrollable part is complex elliptic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub au_c_elliptic: Option<bool>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, String>,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub source: String,
    pub document: InputDocument,
    pub matrix: PolyMatrix,
    pub points: Vec<Vec<GaussianRational>>,
    pub expected: Expected,
}

pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|(n, _)| *n).collect()
}

pub fn fixture_source(name: &str) -> Result<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s).ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

pub fn load_fixture(name: &str) -> Result<Fixture> {
    Fixture::from_source(name, fixture_source(name)?)
}

impl Fixture {
    /// Any input document can serve as a fixture; its `expected` block (if
    /// any) is what `check_expectations` compares against.
    pub fn from_source(name: &str, source: &str) -> Result<Fixture> {
        let document = InputDocument::from_json(source)?;
        let ring = document.ring(BaseOrder::Grevlex)?;
        let matrix = document.matrix(&ring)?;
        let points = document.points()?;
        let expected = document.expected.clone().unwrap_or_default();
        Ok(Fixture { name: name.to_string(), source: source.to_string(), document, matrix, points, expected })
    }
}

pub fn load_all() -> Result<Vec<Fixture>> {
    fixture_names().into_iter().map(load_fixture).collect()
}

/// One compared field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldCheck {
    pub field: &'static str,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
}

impl fmt::Display for FieldCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "ok" } else { "MISMATCH" };
        write!(f, "{}: expected {}, observed {} [{mark}]", self.field, self.expected, self.observed)
    }
}

fn field<T: fmt::Debug + PartialEq>(
    out: &mut Vec<FieldCheck>,
    name: &'static str,
    expected: &Option<T>,
    observed: impl FnOnce() -> Result<T>,
) -> Result<()> {
    if let Some(e) = expected {
        let o = observed()?;
        out.push(FieldCheck { field: name, expected: format!("{e:?}"), observed: format!("{o:?}"), passed: *e == o });
    }
    Ok(())
}

/// Recomputes every expected field of a fixture.
pub fn check_expectations(fx: &Fixture) -> Result<Vec<FieldCheck>> {
    let exp = &fx.expected;
    let a = &fx.matrix;
    let ring = a.ring();
    let opts = ClassifyOptions { points: fx.points.clone(), samples: fx.document.samples(), seed: fx.document.seed() };
    let report = classify(a, &opts)?;
    let mut out = Vec::new();

    field(&mut out, "generic_rank", &exp.generic_rank, || Ok(report.generic_rank))?;
    field(&mut out, "row_homogeneous", &exp.row_homogeneous, || Ok(report.homogeneity.row_homogeneous))?;
    field(&mut out, "c_elliptic", &exp.c_elliptic.map(Some), || Ok(report.c_elliptic.as_ref().map(|v| v.holds)))?;
    field(&mut out, "c_constant_rank", &exp.c_constant_rank.map(Some), || {
        Ok(report.c_constant_rank.as_ref().map(|v| v.holds))
    })?;
    for (name, want, got) in [
        ("r_elliptic", exp.r_elliptic, &report.r_elliptic),
        ("r_constant_rank", exp.r_constant_rank, &report.r_constant_rank),
    ] {
        if let Some(want) = want {
            let passed = got.as_ref().is_some_and(|v| want.accepts(v));
            let observed = got.as_ref().map_or("not applicable", RealVerdict::label).to_string();
            out.push(FieldCheck { field: name, expected: format!("{want:?}"), observed, passed });
        }
    }
    field(&mut out, "controllability", &exp.controllability, || Ok(report.controllability.verdict))?;
    field(&mut out, "transpose_controllability", &exp.transpose_controllability, || {
        Ok(classify_controllability(&a.transpose())?.verdict)
    })?;
    field(&mut out, "point_ranks", &exp.point_ranks, || {
        fx.points.iter().map(|p| Ok(crate::rank::evaluate_matrix(a, p)?.rank)).collect()
    })?;
    field(&mut out, "relations", &exp.relations, || {
        let s = crate::syzygy_matrix(a);
        Ok(pointwise_exactness_all(a, &s, &fx.points)?.into_iter().map(|c| c.relation).collect())
    })?;
    if let Some(cols) = &exp.syzygy {
        let s = crate::syzygy_matrix(a);
        let observed = Submodule::generate(ring, s.nrows(), &s.columns())?;
        let wanted = PolyMatrix::parse(ring, cols)?;
        let wanted = Submodule::generate(ring, wanted.nrows(), &wanted.columns())?;
        let passed = observed.rank() == wanted.rank() && module_equal(&observed, &wanted)?;
        out.push(FieldCheck {
            field: "syzygy",
            expected: format!("{cols:?}"),
            observed: s.to_strings().concat().join(", "),
            passed,
        });
    }
    if exp.conductor.is_some() || exp.exponent.is_some() || exp.au_c_elliptic.is_some() {
        let d = decompose(a)?;
        if let Some(gens) = &exp.conductor {
            let polys = gens.iter().map(|g| parse_poly(g, ring)).collect::<Result<Vec<_>>>()?;
            let wanted = Ideal::generate(ring, &polys)?;
            out.push(FieldCheck {
                field: "conductor",
                expected: format!("{gens:?}"),
                observed: d.conductor.to_string(),
                passed: wanted == d.conductor,
            });
        }
        field(&mut out, "exponent", &exp.exponent, || Ok(d.exponent))?;
        field(&mut out, "au_c_elliptic", &exp.au_c_elliptic, || Ok(is_c_elliptic(&d.a_u)?.holds))?;
    }
    Ok(out)
}

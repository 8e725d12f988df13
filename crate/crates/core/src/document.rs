//! The `syzkit/1` input document: variables, a matrix of polynomial strings,
//! optional evaluation points, sampling parameters and, for corpus fixtures,
//! expected results.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::corpus::Expected;
use crate::error::{Error, Result};
use crate::gb::PolyMatrix;
use crate::poly::{parse_poly, BaseOrder, GaussianRational, Ring};

pub const SCHEMA: &str = "syzkit/1";
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_SAMPLES: usize = 50;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub variables: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    /// Coordinates as strings: rationals or Gaussian rationals `a+b*i`.
    #[serde(default)]
    pub points: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<InputDocument> {
        let doc: InputDocument = serde_json::from_str(text)
            .map_err(|e| Error::Document(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        if doc.schema != SCHEMA {
            return Err(Error::Document(format!("unsupported schema `{}`, expected `{SCHEMA}`", doc.schema)));
        }
        Ok(doc)
    }

    pub fn from_matrix(a: &PolyMatrix) -> InputDocument {
        InputDocument {
            schema: SCHEMA.into(),
            name: None,
            description: None,
            variables: a.ring().variables().to_vec(),
            matrix: a.to_strings(),
            points: Vec::new(),
            seed: None,
            samples: None,
            expected: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn ring(&self, order: BaseOrder) -> Result<Arc<Ring>> {
        Ring::with_order(self.variables.iter(), order.into())
    }

    /// Parses the matrix; errors name the offending entry.
    pub fn matrix(&self, ring: &Arc<Ring>) -> Result<PolyMatrix> {
        let cols = match self.matrix.first() {
            Some(row) if !row.is_empty() => row.len(),
            _ => return Err(Error::Document("matrix must have at least one row and one column".into())),
        };
        let mut rows = Vec::with_capacity(self.matrix.len());
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Document(format!("matrix row {i} has {} entries, expected {cols}", row.len())));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(j, s)| parse_poly(s, ring).map_err(|e| Error::Document(format!("matrix[{i}][{j}] `{s}`: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        PolyMatrix::from_rows(ring, cols, rows)
    }

    pub fn points(&self) -> Result<Vec<Vec<GaussianRational>>> {
        self.points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                parse_coordinates(p.iter().map(String::as_str), self.variables.len())
                    .map_err(|e| Error::Document(format!("points[{i}]: {e}")))
            })
            .collect()
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }

    pub fn samples(&self) -> usize {
        self.samples.unwrap_or(DEFAULT_SAMPLES)
    }
}

fn parse_coordinates<'a>(coords: impl Iterator<Item = &'a str>, arity: usize) -> Result<Vec<GaussianRational>> {
    let point = coords.map(|c| c.trim().parse::<GaussianRational>()).collect::<Result<Vec<_>>>()?;
    if point.len() != arity {
        return Err(Error::ArityMismatch { expected: arity, found: point.len() });
    }
    Ok(point)
}

/// Parses `"c1,...,cn"`.
pub fn parse_point(text: &str, arity: usize) -> Result<Vec<GaussianRational>> {
    parse_coordinates(text.split(','), arity)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str =
        r#"{"schema": "syzkit/1", "variables": ["x", "y"], "matrix": [["x", "y^2"]], "points": [["1", "2-i"]]}"#;

    #[test]
    fn parses_minimal_document() {
        let doc = InputDocument::from_json(DOC).unwrap();
        let ring = doc.ring(BaseOrder::Grevlex).unwrap();
        let a = doc.matrix(&ring).unwrap();
        assert_eq!((a.nrows(), a.ncols()), (1, 2));
        assert_eq!(doc.points().unwrap()[0][1].to_string(), "2-i");
        assert_eq!((doc.seed(), doc.samples()), (DEFAULT_SEED, DEFAULT_SAMPLES));
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(InputDocument::from_json("{"), Err(Error::Document(_))));
        let wrong_schema = DOC.replace("syzkit/1", "syzkit/0");
        assert!(InputDocument::from_json(&wrong_schema).is_err());
        let doc = InputDocument::from_json(&DOC.replace("y^2", "z")).unwrap();
        let err = doc.matrix(&doc.ring(BaseOrder::Grevlex).unwrap()).unwrap_err();
        assert!(err.to_string().contains("matrix[0][1]"), "{err}");
        let doc = InputDocument::from_json(&DOC.replace(r#"["1", "2-i"]"#, r#"["1"]"#)).unwrap();
        assert!(doc.points().is_err());
        assert!(parse_point("1,i", 2).is_ok());
        assert_eq!(parse_point("1", 2), Err(Error::ArityMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn round_trips() {
        let doc = InputDocument::from_json(DOC).unwrap();
        assert_eq!(InputDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
}

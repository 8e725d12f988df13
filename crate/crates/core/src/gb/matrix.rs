use std::fmt;
use std::sync::Arc;

use super::ModuleElement;
use crate::error::{Error, Result};
use crate::poly::{parse_poly, same_ring, GaussianRational, Polynomial, Ring};

/// Rectangular `rows x cols` matrix of polynomials over one ring. Matrices
/// with zero rows or zero columns are allowed; an empty syzygy matrix is a
/// `k x 0` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(ring: &Arc<Ring>, cols: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::NotRectangular);
            }
            for p in row {
                if !same_ring(p.ring(), ring) {
                    return Err(Error::RingMismatch);
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: nrows, cols, entries })
    }

    /// Parses a nonempty rectangular table of polynomial strings.
    pub fn parse<S: AsRef<str>>(ring: &Arc<Ring>, rows: &[Vec<S>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_poly(s.as_ref(), ring)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(ring, cols, parsed)
    }

    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Arc<Ring>, k: usize) -> Self {
        let mut m = Self::zeros(ring, k, k);
        for i in 0..k {
            m.entries[i * k + i] = Polynomial::one(ring);
        }
        m
    }

    /// Matrix whose columns are the given elements of `R^nrows`.
    pub fn from_columns(ring: &Arc<Ring>, nrows: usize, cols: &[ModuleElement]) -> Result<Self> {
        let mut m = Self::zeros(ring, nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.rank() != nrows {
                return Err(Error::RankMismatch { expected: nrows, found: c.rank() });
            }
            for i in 0..nrows {
                m.entries[i * cols.len() + j] = c.component(i).clone();
            }
        }
        Ok(m)
    }

    /// Matrix whose rows are the given elements of `R^ncols`.
    pub fn from_row_elements(ring: &Arc<Ring>, ncols: usize, rows: &[ModuleElement]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                if r.rank() != ncols {
                    return Err(Error::RankMismatch { expected: ncols, found: r.rank() });
                }
                Ok(r.components().to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(ring, ncols, rows)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn row(&self, i: usize) -> ModuleElement {
        ModuleElement::from_parts(&self.ring, self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> ModuleElement {
        ModuleElement::from_parts(&self.ring, (0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    /// Rows as elements of `R^cols`: the generators of `im A^T`.
    pub fn rows(&self) -> Vec<ModuleElement> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn columns(&self) -> Vec<ModuleElement> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, entries }
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::RankMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for t in 0..self.cols {
                    let a = self.get(i, t);
                    let b = other.get(t, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    /// Entrywise evaluation at a point of `Q(i)^n`, row-major.
    pub fn evaluate(&self, point: &[GaussianRational]) -> Result<Vec<Vec<GaussianRational>>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).evaluate(point)).collect()).collect()
    }

    /// Canonical strings, row-major.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect()
    }

    /// Submatrix with the given row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { ring: self.ring.clone(), rows: rows.len(), cols: cols.len(), entries }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_strings() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

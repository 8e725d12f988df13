//! Exact Gaussian elimination over the Gaussian rationals.

use crate::error::{Error, Result};
use crate::gb::PolyMatrix;
use crate::poly::GaussianRational;

/// A matrix over `Q(i)` with its rank, a kernel basis and a column-space basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluatedMatrix {
    pub entries: Vec<Vec<GaussianRational>>,
    pub rank: usize,
    /// Pivot columns of the reduced row echelon form.
    pub pivots: Vec<usize>,
    /// One vector per free column `f`: `x_f = 1`, other free variables zero.
    pub kernel: Vec<Vec<GaussianRational>>,
    /// The original columns at the pivot positions.
    pub column_space: Vec<Vec<GaussianRational>>,
}

impl EvaluatedMatrix {
    pub fn new(entries: Vec<Vec<GaussianRational>>, ncols: usize) -> EvaluatedMatrix {
        let (reduced, pivots) = rref(&entries, ncols);
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        let kernel = free
            .iter()
            .map(|&f| {
                let mut v = vec![GaussianRational::zero(); ncols];
                v[f] = GaussianRational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&reduced[row][f];
                }
                v
            })
            .collect();
        let column_space = pivots.iter().map(|&p| entries.iter().map(|row| row[p].clone()).collect()).collect();
        EvaluatedMatrix { rank: pivots.len(), entries, pivots, kernel, column_space }
    }

    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.pivots.len() + self.kernel.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }
}

/// Evaluates `A` at `point` and row-reduces the result.
pub fn evaluate_matrix(a: &PolyMatrix, point: &[GaussianRational]) -> Result<EvaluatedMatrix> {
    if point.len() != a.ring().nvars() {
        return Err(Error::ArityMismatch { expected: a.ring().nvars(), found: point.len() });
    }
    Ok(EvaluatedMatrix::new(a.evaluate(point)?, a.ncols()))
}

/// Reduced row echelon form; returns the nonzero rows and the pivot columns.
pub fn rref(rows: &[Vec<GaussianRational>], ncols: usize) -> (Vec<Vec<GaussianRational>>, Vec<usize>) {
    let mut m: Vec<Vec<GaussianRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        m[r] = m[r].iter().map(|x| x * &inv).collect();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (pivot_row, row) = if i < r {
                    let (lo, hi) = m.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = m.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank_of(rows: &[Vec<GaussianRational>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Whether `v` lies in the span of `basis` (vectors of equal length).
pub fn in_span(basis: &[Vec<GaussianRational>], v: &[GaussianRational]) -> bool {
    let n = v.len();
    let base = rank_of(basis, n);
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank_of(&with, n) == base
}

use std::ops::Deref;

use super::dense::DenseMatrix;
use crate::error::{Error, Result};

/// Row-sum tolerance used when the caller does not pick one.
pub const DEFAULT_ROW_SUM_TOL: f64 = 1e-9;

/// A square non-negative matrix whose rows sum to one (within
/// `row_sum_tolerance`).
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticMatrix {
    inner: DenseMatrix,
    row_sum_tolerance: f64,
}

impl StochasticMatrix {
    /// Validates with [`DEFAULT_ROW_SUM_TOL`].
    pub fn new(m: DenseMatrix) -> Result<Self> {
        validate_stochastic(m, DEFAULT_ROW_SUM_TOL)
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        Self::new(DenseMatrix::from_rows(rows)?)
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.inner
    }

    pub fn into_inner(self) -> DenseMatrix {
        self.inner
    }

    pub fn row_sum_tolerance(&self) -> f64 {
        self.row_sum_tolerance
    }

    /// True iff the digraph with an arc `i -> j` for every positive entry is
    /// strongly connected.
    pub fn is_irreducible(&self) -> bool {
        is_irreducible(self)
    }
}

impl Deref for StochasticMatrix {
    type Target = DenseMatrix;

    fn deref(&self) -> &DenseMatrix {
        &self.inner
    }
}

/// Checks that `m` is non-negative with unit row sums.
///
/// Entries in `[-tol, 0)` are clamped to zero; anything more negative is
/// rejected, as is any row whose sum is further than `tol` from one.
pub fn validate_stochastic(mut m: DenseMatrix, tol: f64) -> Result<StochasticMatrix> {
    assert!(tol >= 0.0 && tol.is_finite(), "tolerance must be non-negative");
    let n = m.order();
    for i in 0..n {
        for j in 0..n {
            let v = m[(i, j)];
            if !v.is_finite() {
                return Err(Error::NonFinite { i: i + 1, j: j + 1 });
            }
            if v < -tol {
                return Err(Error::NegativeEntry {
                    i: i + 1,
                    j: j + 1,
                    value: v,
                });
            }
            if v < 0.0 {
                m[(i, j)] = 0.0;
            }
        }
        let sum: f64 = m.row(i).iter().sum();
        if (sum - 1.0).abs() > tol {
            return Err(Error::RowSumViolation { i: i + 1, sum });
        }
    }
    Ok(StochasticMatrix {
        inner: m,
        row_sum_tolerance: tol,
    })
}

/// Strong connectivity of the positive-entry digraph, by a forward and a
/// reverse traversal from state 1.
pub fn is_irreducible(s: &StochasticMatrix) -> bool {
    let n = s.order();
    if n == 0 {
        return false;
    }
    let reaches_all = |arc: &dyn Fn(usize, usize) -> bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for (v, seen_v) in seen.iter_mut().enumerate() {
                if !*seen_v && arc(u, v) {
                    *seen_v = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|x| x)
    };
    reaches_all(&|u, v| s[(u, v)] > 0.0) && reaches_all(&|u, v| s[(v, u)] > 0.0)
}

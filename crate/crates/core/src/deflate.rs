//! Perron deflation of a stochastic matrix.
//!
//! For a stochastic `S` of order `n` and a state `k`, let `S(k|k)` be `S` with
//! row and column `k` removed and `s(k)` be row `k` of `S` without its `k`-th
//! entry. The order `n - 1` matrix
//!
//! ```text
//! S(k) = S(k|k) - j s(k)^T        (j = all-ones column)
//! ```
//!
//! has exactly the eigenvalues of `S` with one copy of the Perron root 1
//! removed. Every row of `S(k)` is the corresponding row of `S(k|k)` minus
//! the deleted row `s(k)`.

use crate::error::{Error, Result};
use crate::matcore::{DenseMatrix, StochasticMatrix};

/// `S(k)` together with the original labels of its rows and columns.
#[derive(Debug, Clone, PartialEq)]
pub struct DeflatedMatrix {
    base_order: usize,
    removed_index: usize,
    inner: DenseMatrix,
    index_map: Vec<usize>,
}

impl DeflatedMatrix {
    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// The 1-based state that was deflated away.
    pub fn removed_index(&self) -> usize {
        self.removed_index
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.inner
    }

    /// Original 1-based labels of the rows/columns of [`Self::matrix`], in
    /// increasing order.
    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }
}

/// Builds `S(k)` for the 1-based state `k`.
pub fn deflate(s: &StochasticMatrix, k: usize) -> Result<DeflatedMatrix> {
    let n = s.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let kk = k - 1;
    let kept: Vec<usize> = (0..n).filter(|&i| i != kk).collect();
    let deleted_row = s.row(kk);
    let inner = DenseMatrix::from_fn(n - 1, |p, q| {
        let (i, j) = (kept[p], kept[q]);
        s[(i, j)] - deleted_row[j]
    });
    Ok(DeflatedMatrix {
        base_order: n,
        removed_index: k,
        inner,
        index_map: kept.into_iter().map(|i| i + 1).collect(),
    })
}

/// `S(1), ..., S(n)` in index order.
pub fn deflated_all(s: &StochasticMatrix) -> Result<Vec<DeflatedMatrix>> {
    let n = s.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    (1..=n).map(|k| deflate(s, k)).collect()
}

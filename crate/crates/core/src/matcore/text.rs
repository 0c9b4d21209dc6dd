//! Plain-text matrix files.
//!
//! ```text
//! # optional comments
//! 2
//! 0 1
//! 1 0
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. The first remaining
//! line holds the order `n`, followed by exactly `n` rows of `n` numbers.

use super::dense::DenseMatrix;
use crate::error::{Error, Result};

/// Non-comment, non-blank lines paired with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_matrix(text: &str) -> Result<DenseMatrix> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(text.lines().count().max(1), "missing matrix order"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(line_no, format!("expected matrix order, found {header:?}")))?;
    if n == 0 {
        return Err(Error::parse(line_no, "matrix order must be positive"));
    }

    let mut rows = Vec::with_capacity(n);
    let mut last_line = line_no;
    for (line_no, line) in lines.by_ref() {
        last_line = line_no;
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| Error::parse(line_no, format!("invalid number {tok:?}")))
            })
            .collect::<Result<Vec<f64>>>()?;
        if row.len() != n {
            return Err(Error::parse(
                line_no,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
        if rows.len() == n {
            break;
        }
    }
    if rows.len() < n {
        return Err(Error::parse(
            last_line,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::parse(line_no, "trailing data after matrix"));
    }
    DenseMatrix::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let m = parse_matrix("# exchange\n2\n\n0 1\n# mid\n1 0\n").unwrap();
        assert_eq!(m.to_rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
    }

    #[test]
    fn decimal_literals_are_exact_nearest() {
        let m = parse_matrix("1\n0.33\n").unwrap();
        assert_eq!(m[(0, 0)], 0.33);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_matrix("2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = parse_matrix("# c\n2\n0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = parse_matrix("2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = parse_matrix("1\n1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("1\nnan\n").is_err());
    }
}

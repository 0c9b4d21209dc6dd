use super::SolverConfig;
use crate::error::{Error, Result};
use crate::matcore::{DenseMatrix, Spectrum};

/// Entrywise symmetry tolerance for [`eig_symmetric`].
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Eigenvalues (descending) and matching unit eigenvectors, as columns of the
/// returned matrix.
pub(crate) fn jacobi(m: &DenseMatrix, cfg: &SolverConfig) -> Result<(Vec<f64>, DenseMatrix)> {
    let n = m.order();
    let mut a = m.clone();
    let mut v = DenseMatrix::identity(n);
    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);

    let mut converged = n < 2;
    for _ in 0..cfg.max_iterations {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum::<f64>()
            .sqrt();
        if off <= cfg.tolerance * scale {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, &mut v, p, q, c, s);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            iterations: cfg.max_iterations,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = DenseMatrix::from_fn(n, |r, c| v[(r, order[c])]);
    Ok((values, vectors))
}

/// `A <- Pᵀ A P`, `V <- V P` for the plane rotation in `(p, q)`.
fn rotate(a: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.order();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

/// Real spectrum of a symmetric matrix, sorted descending.
pub fn eig_symmetric(m: &DenseMatrix, cfg: &SolverConfig) -> Result<Spectrum> {
    let (gap, i, j) = m.asymmetry();
    if gap > SYMMETRY_TOL * m.max_abs().max(1.0) {
        return Err(Error::NotSymmetric {
            i: i + 1,
            j: j + 1,
            gap,
        });
    }
    let (values, _) = jacobi(m, cfg)?;
    Ok(Spectrum::from_real(values))
}

//! Dense eigensolvers used as ground truth for every region and bound.
//!
//! Two independent paths: cyclic Jacobi rotations for symmetric input and
//! Hessenberg QR for everything else. Both are desk-scale (a few hundred rows
//! at most) and carry no external numerical dependency.

mod general;
mod symmetric;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::Spectrum;

pub use general::eig_general;
pub use symmetric::{eig_symmetric, SYMMETRY_TOL};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Jacobi sweeps, or QR iterations per eigenvalue.
    pub max_iterations: usize,
    /// Relative off-diagonal norm (Jacobi) or relative subdiagonal size (QR)
    /// below which an entry counts as zero.
    pub tolerance: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_iterations: 100,
            tolerance: 1e-12,
        }
    }
}

/// Result of removing the Perron root from a spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct NonPerron {
    pub spectrum: Spectrum,
    /// The removed value.
    pub perron: Complex64,
    /// Other eigenvalues still within the tolerance of 1. Nonzero means the
    /// Perron root was not simple, which happens for reducible input.
    pub extra_near_one: usize,
}

/// Drops the single eigenvalue closest to 1, which must lie within `tol`.
pub fn non_perron(spec: &Spectrum, tol: f64) -> Result<NonPerron> {
    let one = Complex64::new(1.0, 0.0);
    let idx = spec
        .closest_to(one)
        .filter(|&i| (spec.values()[i] - one).norm() <= tol)
        .ok_or(Error::PerronNotFound { tol })?;
    let rest: Vec<Complex64> = spec
        .values()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != idx)
        .map(|(_, z)| *z)
        .collect();
    let rest = Spectrum::new(rest);
    Ok(NonPerron {
        extra_near_one: rest.count_near(one, tol),
        perron: spec.values()[idx],
        spectrum: rest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drops_only_the_closest() {
        let s = Spectrum::from_real([1.0, 1.0]);
        let np = non_perron(&s, 1e-8).unwrap();
        assert_eq!(np.spectrum.real_parts(), vec![1.0]);
        assert_eq!(np.extra_near_one, 1);

        let s = Spectrum::from_real([-1.0, 1.0 + 1e-13]);
        let np = non_perron(&s, 1e-8).unwrap();
        assert_eq!(np.spectrum.real_parts(), vec![-1.0]);
        assert_eq!(np.extra_near_one, 0);
    }

    #[test]
    fn missing_perron_root() {
        let s = Spectrum::from_real([0.5, -0.2]);
        assert_eq!(
            non_perron(&s, 1e-8).unwrap_err(),
            Error::PerronNotFound { tol: 1e-8 }
        );
    }
}

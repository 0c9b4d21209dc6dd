//! Eigenvalue localization for stochastic matrices.
//!
//! A stochastic matrix `S` always has the eigenvalue 1. Deflating it at any
//! state `k` gives an order `n - 1` matrix `S(k)` carrying exactly the other
//! eigenvalues, so Geršgorin's theorem applied to every `S(k)` confines the
//! non-Perron spectrum to `⋂_k [G_{S(k)} ∪ {1}]`. For the Randić matrix of a
//! connected graph the same construction collapses to closed-form bounds in
//! terms of degrees and common-neighbor counts.
//!
//! ```
//! use eigloc::{full_inclusion_region, StochasticMatrix};
//! use num_complex::Complex64;
//!
//! let s = StochasticMatrix::from_rows(&[
//!     [0.25, 0.25, 0.3, 0.2],
//!     [0.0, 0.5, 0.33, 0.17],
//!     [0.6, 0.4, 0.0, 0.0],
//!     [0.1, 0.2, 0.3, 0.4],
//! ])?;
//! let region = full_inclusion_region(&s)?;
//! assert!(region.contains(Complex64::new(-0.307, 0.0), 1e-3));
//! assert!(!region.contains(Complex64::new(-0.9, 0.0), 0.0));
//! # Ok::<(), eigloc::Error>(())
//! ```
//!
//! Module map:
//!
//! - [`matcore`]: dense matrices, stochastic validation, spectra
//! - [`deflate`]: the `S(k)` construction
//! - [`regions`]: discs, disc unions, inclusion regions, classic single discs
//! - [`randic`]: graphs, Randić matrices and their eigenvalue bounds
//! - [`eigsolve`]: the dense eigensolvers everything is checked against
//!
//! The guide under `book/` walks through each of these with runnable code.

pub mod deflate;
pub mod eigsolve;
mod error;
pub mod matcore;
pub mod randic;
pub mod regions;

pub use deflate::{deflate, deflated_all, DeflatedMatrix};
pub use eigsolve::{eig_general, eig_symmetric, non_perron, NonPerron, SolverConfig};
pub use error::{Error, Result};
pub use matcore::{
    is_irreducible, parse_matrix, trace, validate_stochastic, DenseMatrix, Spectrum,
    StochasticMatrix, DEFAULT_ROW_SUM_TOL,
};
pub use randic::{
    alpha, beta, common_neighbors, normalized_laplacian_bounds, parse_edge_list, randic_bounds,
    randic_matrix, regular_graph_bounds, rojo_soto_bound, symmetric_randic, BoundReport, Graph,
    LaplacianBounds, RegularBoundReport,
};
pub use regions::{
    contains, cvetkovic_disc, deflated_region, disc_union_in_disc, full_inclusion_region,
    gershgorin_discs, lili_disc, real_interval_hull, ClassicDisc, Disc, DiscUnion,
    InclusionRegion,
};

/// Chapters of the guide, compiled as doc-tests so the book cannot drift
/// from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/stochastic.md")]
    mod stochastic {}
    #[doc = include_str!("../../../book/src/deflation.md")]
    mod deflation {}
    #[doc = include_str!("../../../book/src/regions.md")]
    mod regions {}
    #[doc = include_str!("../../../book/src/randic.md")]
    mod randic {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}

//! Dense matrices, stochasticity validation and irreducibility.

mod dense;
mod spectrum;
mod stochastic;
mod text;

pub use dense::{trace, DenseMatrix};
pub use spectrum::{multiset_distance, Spectrum};
pub use stochastic::{is_irreducible, validate_stochastic, StochasticMatrix, DEFAULT_ROW_SUM_TOL};
pub use text::parse_matrix;

pub(crate) use text::content_lines;

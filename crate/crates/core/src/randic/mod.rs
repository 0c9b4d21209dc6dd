//! Graphs, Randić matrices and closed-form bounds on their spectra.

mod bounds;
mod graph;

pub use bounds::{
    alpha, beta, bounds_via_regions, normalized_laplacian_bounds, randic_bounds,
    regular_graph_bounds, rojo_soto_bound, BoundReport, LaplacianBounds, RegularBoundReport,
};
pub use graph::{common_neighbors, parse_edge_list, randic_matrix, symmetric_randic, Graph};

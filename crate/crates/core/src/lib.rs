//! Spectral centrality toolkit for undirected simple graphs.
//!
//! The crate is organised around the Laplacian eigendecomposition:
//!
//! - [`graph`]: graph construction (edge-list parsing, canonical families,
//!   the bundled Florentine marriage network) and derived matrices.
//! - [`spectral`]: dense symmetric eigendecomposition with the descending
//!   eigenvalue convention, multiplicity grouping, and cumulative-spectrum
//!   analysis.
//! - [`lec`]: Laplacian eigenvector centrality of a given order, its
//!   proportional and cumulative-threshold variants, the generalized
//!   weighted form, and order-selection heuristics.
//! - [`centrality`]: classical comparison measures (degree, eigenvector,
//!   Katz-Bonacich, Bonacich power, diffusion, closeness, betweenness).
//! - [`randnet`]: seeded Erdős–Rényi, Barabási–Albert, and clustered
//!   random-graph generators.
//! - [`econ`]: equilibrium responses of a quadratic coordination game on a
//!   network, shock attenuation, public-information disclosure, and
//!   targeted-intervention scoring.
//! - [`stats`]: correlation coefficients, percentile curves, and batch
//!   experiment tables over generated graphs.
//! - [`export`]: CSV and JSON emission for all of the above.

pub mod centrality;
pub mod econ;
mod eigh;
pub mod export;
pub mod graph;
pub mod lec;
pub mod randnet;
pub mod spectral;
pub mod stats;

pub use graph::{Graph, GraphError, SymmetricMatrix};
pub use lec::{Measure, ScoreVector, WeightVector};
pub use spectral::{SpectralError, Spectrum};

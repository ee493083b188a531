//! Matrix energies of egocentric networks.
//!
//! For every vertex of an undirected simple graph this crate extracts the
//! radius-1 egocentric network, builds its adjacency, Randić and Laplacian
//! matrices and sums the absolute (shifted) eigenvalues. The energies are
//! compared against classical centralities (degree, betweenness, closeness,
//! local clustering, eigencentrality) over parameter sweeps of four
//! generative models: Erdős–Rényi, Watts–Strogatz, Holme–Kim and Waxman.
//!
//! ```
//! use egonet_core::{Graph, spectral};
//!
//! let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
//! let e = spectral::ego_energies(&star, 0).unwrap();
//! assert!((e.graph_energy - 2.0 * 3f64.sqrt()).abs() < 1e-9);
//! ```

pub mod centrality;
mod error;
pub mod generators;
pub mod graph;
pub mod spectral;
pub mod stats;
pub mod sweep;

pub use centrality::{features_all, ClusteringVariant, VertexFeatures};
pub use error::{Error, Result};
pub use generators::{GenSpec, Model, ModelParams, WaxmanLayout};
pub use graph::{build_graph, EgoNetwork, Graph};
pub use spectral::{EnergyTriple, Spectrum, SymMatrix};
pub use stats::{CorrelationMatrix, EntropyTriple, FEATURE_LABELS};
pub use sweep::{SweepConfig, SweepResult};

//! Edge-intersection graphs of paths on a grid.
//!
//! Data model ([`GridPath`], [`Graph`], [`Representation`]), segment analysis
//! and validation, exact lower-bound inequalities for complete bipartite
//! graphs, explicit constructions, the 1-bend to monotone 3-bend transform,
//! and a small exhaustive search oracle.

pub mod analysis;
pub mod bounds;
pub mod constructions;
pub mod document;
pub mod graph;
pub mod grid;
pub mod representation;
pub mod search;
pub mod transform;

pub use analysis::{derived_graph, validate, AnalysisError, ValidationReport};
pub use document::{
    graph_to_json, parse_graph, parse_representation, representation_to_json, DocumentError,
};
pub use graph::{Graph, GraphError};
pub use grid::{canonicalize_path, GridEdge, GridPath, GridPoint, Orientation, PathError};
pub use representation::Representation;

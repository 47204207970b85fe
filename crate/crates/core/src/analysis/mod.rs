//! Segments, pair classification, a/c/p counting and validation.

mod acp;
mod segment;
mod validate;

use thiserror::Error;

pub use acp::{check_pair_bounds, count_acp, perpendicular_pairs, AcpCounts, PairBoundsReport};
pub use segment::{
    bend_count, classify_pair, is_monotonic, orientation_counts, segments, PairClass, Segment,
};
pub use validate::{
    derived_graph, paths_intersect, validate, validate_document, ValidationReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("segments both belong to {0:?}")]
    SameOwner(String),
    #[error("paths of {0:?} and {1:?} share a grid edge")]
    IntersectingInput(String, String),
    #[error("path has {bends} bends, more than k = {k}")]
    TooManyBends { bends: usize, k: usize },
    #[error(
        "vertex sets differ: only in representation {only_in_representation:?}, \
         only in graph {only_in_graph:?}"
    )]
    DomainMismatch {
        only_in_representation: Vec<String>,
        only_in_graph: Vec<String>,
    },
}

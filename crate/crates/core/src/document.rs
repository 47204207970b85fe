//! JSON documents for graphs and representations.
//!
//! Graph: `{"vertices": ["a", ...], "edges": [["a", "b"], ...]}`
//!
//! Representation: `{"paths": {"a": [[col, row], ...], ...}}`
//!
//! Output is hand-formatted (one edge or path per line) so that large
//! representations stay diffable, and `to_*` followed by `parse_*` followed
//! by `to_*` reproduces the same bytes.

use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::Deserialize;
use thiserror::Error;

use crate::grid::{canonicalize_path, PathError};
use crate::graph::{Graph, GraphError};
use crate::representation::Representation;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("path {label:?}: {source}")]
    Path {
        label: String,
        #[source]
        source: PathError,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationDoc {
    paths: IndexMap<String, Vec<(i64, i64)>>,
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

pub fn graph_to_json(g: &Graph) -> String {
    let mut out = String::from("{\n  \"vertices\": [");
    for (i, v) in g.vertices().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&quote(v));
    }
    out.push_str("],\n  \"edges\": [");
    for (i, (a, b)) in g.edges().enumerate() {
        out.push_str(if i == 0 { "\n    " } else { ",\n    " });
        let _ = write!(out, "[{}, {}]", quote(a), quote(b));
    }
    if g.edge_count() > 0 {
        out.push_str("\n  ");
    }
    out.push_str("]\n}\n");
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, DocumentError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    Ok(Graph::from_parts(doc.vertices, doc.edges)?)
}

pub fn representation_to_json(r: &Representation) -> String {
    let mut out = String::from("{\n  \"paths\": {");
    for (i, (label, path)) in r.iter().enumerate() {
        out.push_str(if i == 0 { "\n    " } else { ",\n    " });
        let _ = write!(out, "{}: [", quote(label));
        for (j, p) in path.points().iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "[{}, {}]", p.col, p.row);
        }
        out.push(']');
    }
    if !r.is_empty() {
        out.push_str("\n  ");
    }
    out.push_str("}\n}\n");
    out
}

/// Strict parse: any malformed path is an error.
pub fn parse_representation(text: &str) -> Result<Representation, DocumentError> {
    let (r, bad) = parse_representation_lenient(text)?;
    match bad.into_iter().next() {
        Some((label, source)) => Err(DocumentError::Path { label, source }),
        None => Ok(r),
    }
}

/// Parses what it can; malformed paths are reported per label and left out
/// of the representation.
pub fn parse_representation_lenient(
    text: &str,
) -> Result<(Representation, Vec<(String, PathError)>), DocumentError> {
    let doc: RepresentationDoc = serde_json::from_str(text)?;
    let mut r = Representation::new();
    let mut bad = Vec::new();
    for (label, pts) in doc.paths {
        match canonicalize_path(pts) {
            Ok(p) => {
                r.insert(label, p);
            }
            Err(e) => bad.push((label, e)),
        }
    }
    Ok((r, bad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridPath;

    #[test]
    fn graph_round_trip() {
        let g = Graph::from_parts(["x", "a \"q\"", "b"], [("b", "x"), ("x", "a \"q\"")]).unwrap();
        let s = graph_to_json(&g);
        let g2 = parse_graph(&s).unwrap();
        assert_eq!(g, g2);
        assert_eq!(graph_to_json(&g2), s);
    }

    #[test]
    fn empty_documents() {
        let g = Graph::new();
        assert_eq!(graph_to_json(&g), "{\n  \"vertices\": [],\n  \"edges\": []\n}\n");
        assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
        let r = Representation::new();
        assert_eq!(representation_to_json(&r), "{\n  \"paths\": {}\n}\n");
        assert_eq!(parse_representation(&representation_to_json(&r)).unwrap(), r);
    }

    #[test]
    fn representation_round_trip_keeps_order() {
        let r: Representation = [
            ("z", GridPath::new([(0, 0), (2, 0), (2, -3)]).unwrap()),
            ("a", GridPath::segment((1, 1), (1, 4)).unwrap()),
        ]
        .into_iter()
        .collect();
        let s = representation_to_json(&r);
        assert!(s.find("\"z\"").unwrap() < s.find("\"a\"").unwrap());
        let r2 = parse_representation(&s).unwrap();
        assert_eq!(r2, r);
        assert_eq!(representation_to_json(&r2), s);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_graph("{"), Err(DocumentError::Json(_))));
        assert!(matches!(
            parse_graph(r#"{"vertices":["a"],"edges":[["a","a"]]}"#),
            Err(DocumentError::Graph(GraphError::SelfLoop(_)))
        ));
        let text = r#"{"paths":{"a":[[0,0],[1,1]],"b":[[0,0],[0,1]]}}"#;
        assert!(matches!(
            parse_representation(text),
            Err(DocumentError::Path { ref label, source: PathError::Diagonal(..) }) if label == "a"
        ));
        let (r, bad) = parse_representation_lenient(text).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(bad[0].0, "a");
    }

    #[test]
    fn non_canonical_input_is_canonicalized() {
        let r = parse_representation(r#"{"paths":{"a":[[0,0],[1,0],[2,0]]}}"#).unwrap();
        assert_eq!(r.get("a").unwrap().points().len(), 2);
    }
}

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::document::parse_representation_lenient;
use crate::graph::Graph;
use crate::grid::GridEdge;
use crate::representation::Representation;
use crate::DocumentError;

use super::AnalysisError;

/// Owner indices per grid edge, in one pass over all paths.
fn edge_owners(r: &Representation) -> HashMap<GridEdge, Vec<u32>> {
    let mut owners: HashMap<GridEdge, Vec<u32>> = HashMap::new();
    for (i, (_, p)) in r.iter().enumerate() {
        for e in p.edges() {
            owners.entry(e).or_default().push(i as u32);
        }
    }
    owners
}

/// Intersection graph of the representation: two labels are adjacent iff
/// their paths share a grid edge.
pub fn derived_graph(r: &Representation) -> Graph {
    let labels: Vec<&str> = r.labels().collect();
    let mut pairs: HashSet<(u32, u32)> = HashSet::new();
    for owners in edge_owners(r).values() {
        for (x, &i) in owners.iter().enumerate() {
            for &j in &owners[x + 1..] {
                pairs.insert((i.min(j), i.max(j)));
            }
        }
    }
    let mut g = Graph::new();
    for l in &labels {
        g.add_vertex(l).expect("representation labels are unique");
    }
    for (i, j) in pairs {
        g.add_edge(labels[i as usize], labels[j as usize])
            .expect("pairs are distinct and deduplicated");
    }
    g
}

pub fn paths_intersect(p1: &crate::GridPath, p2: &crate::GridPath) -> bool {
    let e1 = p1.edge_set();
    p2.edges().any(|e| e1.contains(&e))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub missing_edges: Vec<(String, String)>,
    pub spurious_edges: Vec<(String, String)>,
    pub max_bends: usize,
    pub nonmonotonic_vertices: Vec<String>,
    pub malformed_paths: Vec<String>,
    /// Vertices whose path exceeds the requested bend budget.
    pub over_bend_budget: Vec<String>,
}

impl ValidationReport {
    fn finish(mut self) -> Self {
        self.ok = self.missing_edges.is_empty()
            && self.spurious_edges.is_empty()
            && self.nonmonotonic_vertices.is_empty()
            && self.malformed_paths.is_empty()
            && self.over_bend_budget.is_empty();
        self
    }
}

fn check_domain<'a>(
    labels: impl IntoIterator<Item = &'a str>,
    g: &Graph,
) -> Result<(), AnalysisError> {
    let have: HashSet<&str> = labels.into_iter().collect();
    let mut only_rep: Vec<String> = have
        .iter()
        .filter(|l| !g.contains_vertex(l))
        .map(|l| l.to_string())
        .collect();
    let mut only_graph: Vec<String> = g
        .vertices()
        .iter()
        .filter(|v| !have.contains(v.as_str()))
        .cloned()
        .collect();
    if only_rep.is_empty() && only_graph.is_empty() {
        return Ok(());
    }
    only_rep.sort();
    only_graph.sort();
    Err(AnalysisError::DomainMismatch { only_in_representation: only_rep, only_in_graph: only_graph })
}

/// Compares the representation against `g`, optionally enforcing a bend
/// budget and monotonicity.
pub fn validate(
    r: &Representation,
    g: &Graph,
    max_bends: Option<usize>,
    require_monotonic: bool,
) -> Result<ValidationReport, AnalysisError> {
    check_domain(r.labels(), g)?;
    Ok(compare(r, g, max_bends, require_monotonic))
}

fn compare(
    r: &Representation,
    g: &Graph,
    max_bends: Option<usize>,
    require_monotonic: bool,
) -> ValidationReport {
    let d = derived_graph(r);
    let present = |x: &str| r.get(x).is_some();
    let mut report = ValidationReport {
        max_bends: r.max_bends(),
        ..Default::default()
    };
    for (a, b) in g.edges() {
        if present(a) && present(b) && !d.has_edge(a, b) {
            report.missing_edges.push((a.to_owned(), b.to_owned()));
        }
    }
    for (a, b) in d.edges() {
        if !g.has_edge(a, b) {
            report.spurious_edges.push((a.to_owned(), b.to_owned()));
        }
    }
    for (l, p) in r.iter() {
        if require_monotonic && !p.is_monotonic() {
            report.nonmonotonic_vertices.push(l.to_owned());
        }
        if max_bends.is_some_and(|k| p.bends() > k) {
            report.over_bend_budget.push(l.to_owned());
        }
    }
    report.finish()
}

/// Validates a representation document. Paths that fail to parse are listed
/// in `malformed_paths`; edges incident to them are not reported as missing.
pub fn validate_document(
    text: &str,
    g: &Graph,
    max_bends: Option<usize>,
    require_monotonic: bool,
) -> Result<Result<ValidationReport, AnalysisError>, DocumentError> {
    let (r, bad) = parse_representation_lenient(text)?;
    let labels = r.labels().chain(bad.iter().map(|(l, _)| l.as_str()));
    if let Err(e) = check_domain(labels, g) {
        return Ok(Err(e));
    }
    let mut report = compare(&r, g, max_bends, require_monotonic);
    report.malformed_paths = bad.into_iter().map(|(l, _)| l).collect();
    Ok(Ok(report.finish()))
}

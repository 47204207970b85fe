use std::collections::{BTreeMap, BTreeSet, HashSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {{{0:?}, {1:?}}}")]
    DuplicateEdge(String, String),
    #[error("edge endpoint {0:?} is not a vertex")]
    UnknownVertex(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
}

/// Simple undirected graph on string labels.
///
/// Vertex order is kept as given (it drives document output and processing
/// order elsewhere); edges are stored as sorted label pairs.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    vertices: Vec<String>,
    index: HashSet<String>,
    edges: BTreeSet<(String, String)>,
}

fn ordered(u: &str, v: &str) -> (String, String) {
    if u <= v {
        (u.to_owned(), v.to_owned())
    } else {
        (v.to_owned(), u.to_owned())
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_parts<V, E, S>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v.as_ref())?;
        }
        for (u, v) in edges {
            g.add_edge(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: &str) -> Result<(), GraphError> {
        if !self.index.insert(v.to_owned()) {
            return Err(GraphError::DuplicateVertex(v.to_owned()));
        }
        self.vertices.push(v.to_owned());
        Ok(())
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u.to_owned()));
        }
        for x in [u, v] {
            if !self.index.contains(x) {
                return Err(GraphError::UnknownVertex(x.to_owned()));
            }
        }
        let e = ordered(u, v);
        if !self.edges.insert(e.clone()) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.index.contains(v)
    }

    /// Edges as sorted label pairs, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.edges.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        self.edges.contains(&ordered(u, v))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self) -> BTreeMap<&str, BTreeSet<&str>> {
        let mut adj: BTreeMap<&str, BTreeSet<&str>> =
            self.vertices.iter().map(|v| (v.as_str(), BTreeSet::new())).collect();
        for (a, b) in self.edges() {
            adj.get_mut(a).unwrap().insert(b);
            adj.get_mut(b).unwrap().insert(a);
        }
        adj
    }

    pub fn degree(&self, v: &str) -> usize {
        self.edges().filter(|&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> BTreeMap<&str, usize> {
        self.neighbors().into_iter().map(|(v, n)| (v, n.len())).collect()
    }

    pub fn same_vertex_set(&self, other: &Graph) -> bool {
        self.index == other.index
    }

    /// Complete bipartite graph with sides `a1..am` and `b1..bn`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let a: Vec<String> = (1..=m).map(|i| format!("a{i}")).collect();
        let b: Vec<String> = (1..=n).map(|j| format!("b{j}")).collect();
        let mut g = Self::new();
        for v in a.iter().chain(&b) {
            g.add_vertex(v).unwrap();
        }
        for x in &a {
            for y in &b {
                g.add_edge(x, y).unwrap();
            }
        }
        g
    }

    /// Complete graph on `v1..vn`.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::new();
        for i in 1..=n {
            g.add_vertex(&format!("v{i}")).unwrap();
        }
        for i in 1..=n {
            for j in i + 1..=n {
                g.add_edge(&format!("v{i}"), &format!("v{j}")).unwrap();
            }
        }
        g
    }

    /// Cycle `v1 v2 .. vn v1`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Self::new();
        for i in 1..=n {
            g.add_vertex(&format!("v{i}")).unwrap();
        }
        for i in 1..=n {
            g.add_edge(&format!("v{i}"), &format!("v{}", i % n + 1)).unwrap();
        }
        g
    }

    /// Path `v1 v2 .. vn`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::new();
        for i in 1..=n {
            g.add_vertex(&format!("v{i}")).unwrap();
        }
        for i in 1..n {
            g.add_edge(&format!("v{i}"), &format!("v{}", i + 1)).unwrap();
        }
        g
    }
}

/// Equality ignores vertex order.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.edges == other.edges
    }
}

impl Eq for Graph {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::from_parts(["a", "b"], []).unwrap();
        assert_eq!(g.add_edge("a", "a"), Err(GraphError::SelfLoop("a".into())));
        assert_eq!(g.add_edge("a", "z"), Err(GraphError::UnknownVertex("z".into())));
        g.add_edge("b", "a").unwrap();
        assert_eq!(
            g.add_edge("a", "b"),
            Err(GraphError::DuplicateEdge("a".into(), "b".into()))
        );
        assert_eq!(g.add_vertex("a"), Err(GraphError::DuplicateVertex("a".into())));
    }

    #[test]
    fn equality_ignores_order() {
        let g1 = Graph::from_parts(["a", "b", "c"], [("a", "b")]).unwrap();
        let g2 = Graph::from_parts(["c", "b", "a"], [("b", "a")]).unwrap();
        assert_eq!(g1, g2);
        let g3 = Graph::from_parts(["c", "b", "a"], [("b", "c")]).unwrap();
        assert_ne!(g1, g3);
    }

    #[test]
    fn families() {
        let k = Graph::complete_bipartite(3, 4);
        assert_eq!((k.vertex_count(), k.edge_count()), (7, 12));
        assert!(k.has_edge("b2", "a3"));
        assert!(!k.has_edge("a1", "a2"));
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::cycle(4).degrees().values().copied().collect::<Vec<_>>(), vec![2; 4]);
        assert_eq!(Graph::path(3).degree("v2"), 2);
    }
}

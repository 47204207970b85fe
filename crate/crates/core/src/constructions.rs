//! Explicit graphs and representations: stars, the monotone staircase
//! representation of `K_{m,n}`, the gadget graph `H_2`, the graph `H_1` with a
//! 2-bend representation, and a small 1-bend fixture for the transform.
//!
//! Coordinates are chosen here; correctness is checked by validation.

use thiserror::Error;

use crate::graph::Graph;
use crate::grid::GridPath;
use crate::representation::Representation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("parameters out of range: {0}")]
    Range(String),
}

pub fn a_label(i: usize) -> String {
    format!("a{i}")
}

pub fn b_label(j: usize) -> String {
    format!("b{j}")
}

fn path(points: &[(i64, i64)]) -> GridPath {
    GridPath::new(points.iter().copied()).expect("construction emits canonical paths")
}

/// `K_{1,n}` with every path on row 0: the centre `a1` covers `n` edges and
/// leaf `bi` covers edge `[i-1, i]`.
pub fn star_b0(n: usize) -> Result<(Graph, Representation), ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::Range("star needs n >= 1".into()));
    }
    let g = Graph::complete_bipartite(1, n);
    let mut r = Representation::new();
    r.insert(a_label(1), path(&[(0, 0), (n as i64, 0)]));
    for i in 1..=n as i64 {
        r.insert(b_label(i as usize), path(&[(i - 1, 0), (i, 0)]));
    }
    Ok((g, r))
}

/// Monotone representation of `K_{m,n}` with `2m - 2` bends.
///
/// `ai` is row `i` over columns `[0, nm]`. `bj` is a staircase in the column
/// band `[(j-1)m, jm]` taking one unit step along each row `1..=m`.
pub fn kmn_monotonic(m: usize, n: usize) -> Result<(Graph, Representation), ConstructionError> {
    if m < 2 || n < 1 {
        return Err(ConstructionError::Range(format!("need m >= 2, n >= 1, got m={m}, n={n}")));
    }
    let g = Graph::complete_bipartite(m, n);
    let (mi, ni) = (m as i64, n as i64);
    let mut r = Representation::new();
    for i in 1..=mi {
        r.insert(a_label(i as usize), path(&[(0, i), (ni * mi, i)]));
    }
    for j in 1..=ni {
        let x0 = (j - 1) * mi;
        let mut pts = Vec::with_capacity(2 * m);
        for i in 1..=mi {
            pts.push((x0 + i - 1, i));
            pts.push((x0 + i, i));
        }
        r.insert(b_label(j as usize), path(&pts));
    }
    Ok((g, r))
}

/// Labels `{prefix}c1..{prefix}c6` of a gadget.
pub fn gadget_labels(prefix: &str) -> [String; 6] {
    std::array::from_fn(|i| format!("{prefix}c{}", i + 1))
}

/// The gadget `H_2` attached to `u` and `v`: a 6-cycle `c1..c6` with chords
/// `c1c4` and `c3c6`, and `u`, `v` adjacent to every `ci`. 20 edges.
pub fn h2_gadget(u: &str, v: &str, prefix: &str) -> ([String; 6], Vec<(String, String)>) {
    let c = gadget_labels(prefix);
    let mut edges = Vec::with_capacity(20);
    for i in 0..6 {
        edges.push((c[i].clone(), c[(i + 1) % 6].clone()));
    }
    edges.push((c[0].clone(), c[3].clone()));
    edges.push((c[2].clone(), c[5].clone()));
    for x in [u, v] {
        for ci in &c {
            edges.push((x.to_owned(), ci.clone()));
        }
    }
    (c, edges)
}

/// Relative gadget geometry between an upper row `U` and the row `D = U-1`
/// below it: `(x on D, x of the riser, x on U)` per `c1..c6`.
const GADGET: [(i64, i64, i64); 6] = [
    (9, 4, 3),
    (1, 2, 6),
    (13, 10, 5),
    (6, 7, 13),
    (17, 16, 12),
    (8, 14, 15),
];

/// Width of one gadget placement, including its riser-free margins.
const GADGET_WIDTH: i64 = 18;

fn gadget_paths(x: i64, upper: i64) -> [GridPath; 6] {
    let lower = upper - 1;
    GADGET.map(|(d, s, u)| path(&[(x + d, lower), (x + s, lower), (x + s, upper), (x + u, upper)]))
}

/// `H_2` on its own: `u` and `v` are horizontal rows 1 and 0.
pub fn h2_graph() -> (Graph, Representation) {
    let (c, edges) = h2_gadget("u", "v", "");
    let mut g = Graph::new();
    for l in ["u", "v"].into_iter().chain(c.iter().map(String::as_str)) {
        g.add_vertex(l).unwrap();
    }
    for (a, b) in &edges {
        g.add_edge(a, b).unwrap();
    }
    let mut r = Representation::new();
    r.insert("u", path(&[(0, 1), (GADGET_WIDTH, 1)]));
    r.insert("v", path(&[(0, 0), (GADGET_WIDTH, 0)]));
    for (l, p) in c.iter().zip(gadget_paths(0, 1)) {
        r.insert(l.clone(), p);
    }
    (g, r)
}

pub const H1_SIZE: usize = 50;

pub fn h1_b_label(i: usize, j: usize) -> String {
    format!("b_{i}_{j}")
}

pub fn h1_gadget_prefix(i: usize, j: usize) -> String {
    format!("h_{i}_{j}_")
}

/// `H_1` with the default size 50.
pub fn h1_graph() -> Graph {
    h1_graph_sized(H1_SIZE).expect("default size is valid")
}

/// `H_1` built from size `s`: `{u,v}` against `a1..as`; for each consecutive
/// pair `a_j, a_{j+1}` a complete bipartite join to `b_{1,j}..b_{s,j}`; and
/// an `H_2` gadget between `b_{i,j}` and `b_{i+1,j}`.
pub fn h1_graph_sized(s: usize) -> Result<Graph, ConstructionError> {
    if s < 2 {
        return Err(ConstructionError::Range("H1 needs size >= 2".into()));
    }
    let mut g = Graph::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    g.add_vertex("u").unwrap();
    g.add_vertex("v").unwrap();
    for j in 1..=s {
        let a = a_label(j);
        g.add_vertex(&a).unwrap();
        edges.push(("u".into(), a.clone()));
        edges.push(("v".into(), a));
    }
    for j in 1..s {
        for i in 1..=s {
            let b = h1_b_label(i, j);
            g.add_vertex(&b).unwrap();
            edges.push((a_label(j), b.clone()));
            edges.push((a_label(j + 1), b));
        }
        for i in 1..s {
            let (c, gadget_edges) =
                h2_gadget(&h1_b_label(i, j), &h1_b_label(i + 1, j), &h1_gadget_prefix(i, j));
            for l in &c {
                g.add_vertex(l).unwrap();
            }
            edges.extend(gadget_edges);
        }
    }
    for (a, b) in &edges {
        g.add_edge(a, b).unwrap();
    }
    Ok(g)
}

pub fn h1_b2_representation() -> Representation {
    h1_b2_representation_sized(H1_SIZE).expect("default size is valid")
}

/// A 2-bend representation of `H_1` of size `s`.
///
/// `u` and `v` are long horizontals at the bottom and top. Each `a_j` is a
/// vertical at `X_j` with a unit hook onto both. The `b_{i,j}` are brackets
/// stepping from column `X_j` to `X_{j+1}`, stacked downward; alternating
/// column blocks use disjoint row bands so the brackets meeting on a shared
/// `a`-column never overlap. Gadget `(i,j)` sits on the rows of `b_{i,j}` and
/// `b_{i+1,j}`, in the left half of the block for odd `i` and the right half
/// for even `i`.
pub fn h1_b2_representation_sized(s: usize) -> Result<Representation, ConstructionError> {
    if s < 2 {
        return Err(ConstructionError::Range("H1 needs size >= 2".into()));
    }
    let si = s as i64;
    let pitch = 2 * GADGET_WIDTH;
    let x = |j: usize| 1 + pitch * (j as i64 - 1);
    let top_low = si + 1;
    let top_high = top_low + si + 2;
    let y_v = top_high + 2;

    let mut r = Representation::new();
    r.insert("u", path(&[(x(1) - 1, 0), (x(s), 0)]));
    r.insert("v", path(&[(x(1), y_v), (x(s) + 1, y_v)]));
    for j in 1..=s {
        let xj = x(j);
        r.insert(a_label(j), path(&[(xj - 1, 0), (xj, 0), (xj, y_v), (xj + 1, y_v)]));
    }
    for j in 1..s {
        let top = if j % 2 == 1 { top_low } else { top_high };
        let row = |i: usize| top - (i as i64 - 1);
        let (xl, xr) = (x(j), x(j + 1));
        for i in 1..=s {
            let h = row(i);
            r.insert(h1_b_label(i, j), path(&[(xl, h - 1), (xl, h), (xr, h), (xr, h + 1)]));
        }
        for i in 1..s {
            let gx = if i % 2 == 1 { xl } else { xl + GADGET_WIDTH };
            let labels = gadget_labels(&h1_gadget_prefix(i, j));
            for (l, p) in labels.into_iter().zip(gadget_paths(gx, row(i))) {
                r.insert(l, p);
            }
        }
    }
    Ok(r)
}

/// A 7-vertex graph with 12 edges and a 1-bend representation of it.
pub fn fig2_fixture() -> (Graph, Representation) {
    let g = Graph::from_parts(
        ["a", "b", "c", "d", "e", "f", "g"],
        [
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("a", "f"),
            ("a", "g"),
            ("b", "c"),
            ("b", "d"),
            ("b", "e"),
            ("c", "e"),
            ("c", "f"),
            ("d", "g"),
            ("e", "g"),
        ],
    )
    .unwrap();
    let r: Representation = [
        ("a", path(&[(1, 3), (6, 3), (6, 4)])),
        ("b", path(&[(3, 5), (3, 3), (5, 3)])),
        ("c", path(&[(1, 3), (3, 3), (3, 5)])),
        ("d", path(&[(4, 3), (6, 3), (6, 2)])),
        ("e", path(&[(3, 4), (3, 5), (6, 5)])),
        ("f", path(&[(1, 3), (2, 3)])),
        ("g", path(&[(6, 2), (6, 5), (5, 5)])),
    ]
    .into_iter()
    .collect();
    (g, r)
}

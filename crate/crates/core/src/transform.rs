//! Turning a 1-bend representation into a monotone 3-bend representation of
//! the same graph.
//!
//! The input is refined (scaled by 3, touching path ends pulled back), then
//! scaled by `s = |V| + 1` so that fresh grid lines fit between existing ones.
//! A second copy `R2` is placed above and to the right of `R1`. Each vertex
//! keeps its horizontal in `R1`, cut back to a private column `L|`, and its
//! vertical in `R2`, extended down to a private row `L-`; the two are joined
//! by a riser on `L|` and a run on `L-`.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::analysis::{derived_graph, segments, validate, Segment, ValidationReport};
use crate::graph::Graph;
use crate::grid::{GridPath, GridPoint, Orientation};
use crate::representation::Representation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ConflictKind {
    CollinearPointTouch,
}

/// Two non-adjacent vertices whose collinear segments meet at one point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Conflict {
    pub kind: ConflictKind,
    pub vertices: (String, String),
    pub location: GridPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineAssignment {
    pub vertex: String,
    /// Fresh column carrying the riser (vertices with a horizontal segment).
    pub v_line: Option<i64>,
    /// Fresh row carrying the run (vertices with a vertical segment).
    pub h_line: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("path of {vertex:?} has {bends} bends; input must have at most 1")]
    NotB1 { vertex: String, bends: usize },
    #[error("{} unresolved collinear point touch(es), first at {} between {:?} and {:?}",
        .0.len(), .0[0].location, .0[0].vertices.0, .0[0].vertices.1)]
    Conflict(Vec<Conflict>),
    #[error("transformed representation failed validation")]
    InvalidOutput(Box<ValidationReport>),
}

/// Result of the transform together with the intermediate state.
#[derive(Debug, Clone)]
pub struct Transformed {
    pub representation: Representation,
    pub lines: Vec<LineAssignment>,
    /// Normalized input.
    pub normalized: Representation,
    /// Scaled copy after cutting horizontals back to `L|` (verticals that hang
    /// off the right end are moved onto `L|`).
    pub r1: Representation,
    /// Offset copy after extending verticals down to `L-` (horizontals that
    /// hang off the lower end are moved onto `L-`).
    pub r2: Representation,
    pub scale: i64,
    pub offset: (i64, i64),
}

fn line_key(s: &Segment) -> (Orientation, i64) {
    (s.orientation, s.line)
}

fn point_on(o: Orientation, line: i64, t: i64) -> GridPoint {
    match o {
        Orientation::Horizontal => GridPoint::new(t, line),
        Orientation::Vertical => GridPoint::new(line, t),
    }
}

/// All pairs of non-adjacent vertices with collinear segments touching at
/// exactly one grid point, sorted.
pub fn check_collinear_separation(r: &Representation) -> Vec<Conflict> {
    let adjacent = derived_graph(r);
    // (orientation, line, coordinate) -> owners ending there / starting there
    let mut ends: HashMap<(Orientation, i64, i64), Vec<&str>> = HashMap::new();
    let mut starts: HashMap<(Orientation, i64, i64), Vec<&str>> = HashMap::new();
    let segs: Vec<Segment> = r.iter().flat_map(|(l, p)| segments(p, l)).collect();
    let labels: HashMap<&str, &str> = r.labels().map(|l| (l, l)).collect();
    for s in &segs {
        let (o, line) = line_key(s);
        let owner = labels[s.owner.as_str()];
        ends.entry((o, line, s.span.1)).or_default().push(owner);
        starts.entry((o, line, s.span.0)).or_default().push(owner);
    }
    let mut out = Vec::new();
    for (key, left) in &ends {
        let Some(right) = starts.get(key) else { continue };
        for &x in left {
            for &y in right {
                if x != y && !adjacent.has_edge(x, y) {
                    let (a, b) = if x < y { (x, y) } else { (y, x) };
                    out.push(Conflict {
                        kind: ConflictKind::CollinearPointTouch,
                        vertices: (a.to_owned(), b.to_owned()),
                        location: point_on(key.0, key.1, key.2),
                    });
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Scales by 3 and pulls every path end that touches a collinear foreign
/// segment back by one unit. The derived graph is unchanged.
pub fn normalize(r: &Representation) -> Representation {
    let scaled = r.scaled(3);
    let segs: Vec<Segment> = scaled.iter().flat_map(|(l, p)| segments(p, l)).collect();
    let mut by_line: HashMap<(Orientation, i64), Vec<&Segment>> = HashMap::new();
    for s in &segs {
        by_line.entry(line_key(s)).or_default().push(s);
    }
    let touches = |s: &Segment, at: i64| {
        by_line[&line_key(s)]
            .iter()
            .any(|f| f.owner != s.owner && (f.span.0 == at || f.span.1 == at) && {
                // touching, not overlapping
                f.span.0.max(s.span.0) >= f.span.1.min(s.span.1)
            })
    };
    scaled.map_paths(|label, p| {
        let ss = segments(p, label);
        let mut pts = p.points().to_vec();
        let last = pts.len() - 1;
        for (idx, seg) in [(0usize, &ss[0]), (last, &ss[ss.len() - 1])] {
            let end = pts[idx];
            let t = match seg.orientation {
                Orientation::Horizontal => end.col,
                Orientation::Vertical => end.row,
            };
            if touches(seg, t) {
                let inward = if t == seg.span.0 { 1 } else { -1 };
                pts[idx] = match seg.orientation {
                    Orientation::Horizontal => end.translate(inward, 0),
                    Orientation::Vertical => end.translate(0, inward),
                };
            }
        }
        GridPath::new(pts).expect("retraction keeps at least one unit per segment")
    })
}

/// Horizontal and vertical segment of a path with at most one bend.
struct Parts {
    horizontal: Option<(i64, i64, i64)>, // (row, x1, x2)
    vertical: Option<(i64, i64, i64)>,   // (col, y1, y2)
    bend: Option<GridPoint>,
}

fn parts(p: &GridPath, label: &str) -> Parts {
    let mut out = Parts { horizontal: None, vertical: None, bend: p.bend_points().first().copied() };
    for s in segments(p, label) {
        let v = (s.line, s.span.0, s.span.1);
        match s.orientation {
            Orientation::Horizontal => out.horizontal = Some(v),
            Orientation::Vertical => out.vertical = Some(v),
        }
    }
    out
}

fn ensure_b1(r: &Representation) -> Result<(), TransformError> {
    for (l, p) in r.iter() {
        if p.bends() > 1 {
            return Err(TransformError::NotB1 { vertex: l.to_owned(), bends: p.bends() });
        }
    }
    Ok(())
}

/// Normalizes, checks for conflicts, transforms and re-validates.
pub fn b1_to_b3m(r: &Representation) -> Result<Transformed, TransformError> {
    ensure_b1(r)?;
    let target = derived_graph(r);
    let normalized = normalize(r);
    let conflicts = check_collinear_separation(&normalized);
    if !conflicts.is_empty() {
        return Err(TransformError::Conflict(conflicts));
    }
    let out = construct(normalized);
    check_output(&out.representation, &target)?;
    Ok(out)
}

/// The construction without the conflict precondition or output validation.
/// Exposed to demonstrate what goes wrong on conflicting inputs.
pub fn b1_to_b3m_unchecked(r: &Representation) -> Result<Transformed, TransformError> {
    ensure_b1(r)?;
    Ok(construct(normalize(r)))
}

fn check_output(out: &Representation, target: &Graph) -> Result<(), TransformError> {
    let report = validate(out, target, Some(3), true).expect("same vertex set");
    if report.ok {
        Ok(())
    } else {
        Err(TransformError::InvalidOutput(Box::new(report)))
    }
}

fn construct(normalized: Representation) -> Transformed {
    let s = normalized.len() as i64 + 1;
    let r1_base = normalized.scaled(s);
    let (lo, hi) = r1_base.extent().unwrap_or_default();
    let offset = (hi.col - lo.col + s, hi.row - lo.row + s);

    let mut order: Vec<&str> = normalized.labels().collect();
    order.sort_unstable();

    let mut lines = Vec::with_capacity(order.len());
    let mut out = Representation::new();
    let mut r1 = Representation::new();
    let mut r2 = Representation::new();
    for (i, &label) in order.iter().enumerate() {
        let slot = i as i64 + 1;
        let pr = parts(&normalized[label], label);
        let v_line = pr.horizontal.map(|(_, _, x2)| s * x2 - slot);
        let h_line = pr.vertical.map(|(_, y1, _)| s * y1 + offset.1 - slot);
        lines.push(LineAssignment { vertex: label.to_owned(), v_line, h_line });

        // R1: cut the horizontal back to L|; move a vertical hanging off the
        // right end onto L|.
        let r1_path = match (pr.horizontal, pr.vertical, pr.bend) {
            (Some((y, x1, x2)), vert, bend) => {
                let lv = v_line.unwrap();
                let mut pts = vec![(s * x1, s * y), (lv, s * y)];
                if let (Some((_, y1, y2)), Some(b)) = (vert, bend) {
                    let far = if b.row == y1 { y2 } else { y1 };
                    if b.col == x2 {
                        pts.push((lv, s * far));
                    } else {
                        pts.insert(0, (s * x1, s * far));
                    }
                }
                pts
            }
            (None, Some((x, y1, y2)), _) => vec![(s * x, s * y1), (s * x, s * y2)],
            (None, None, _) => unreachable!("paths have a segment"),
        };
        r1.insert(label, GridPath::new(r1_path).expect("R1 path"));

        // R2: extend the vertical down to L-; move a horizontal hanging off
        // the lower end onto L-.
        let (dx, dy) = offset;
        let r2_path = match (pr.vertical, pr.horizontal, pr.bend) {
            (Some((x, y1, y2)), horiz, bend) => {
                let lh = h_line.unwrap();
                let mut pts = vec![(s * x + dx, lh), (s * x + dx, s * y2 + dy)];
                if let (Some((_, x1, x2)), Some(b)) = (horiz, bend) {
                    let far = if b.col == x1 { x2 } else { x1 };
                    if b.row == y1 {
                        pts.insert(0, (s * far + dx, lh));
                    } else {
                        pts.push((s * far + dx, s * y2 + dy));
                    }
                }
                pts
            }
            (None, Some((y, x1, x2)), _) => vec![(s * x1 + dx, s * y + dy), (s * x2 + dx, s * y + dy)],
            (None, None, _) => unreachable!("paths have a segment"),
        };
        r2.insert(label, GridPath::new(r2_path).expect("R2 path"));

        let q = match (pr.horizontal, pr.vertical) {
            (Some((y, x1, _)), Some((x, _, y2))) => {
                let (lv, lh) = (v_line.unwrap(), h_line.unwrap());
                vec![
                    (s * x1, s * y),
                    (lv, s * y),
                    (lv, lh),
                    (s * x + dx, lh),
                    (s * x + dx, s * y2 + dy),
                ]
            }
            (Some((y, x1, _)), None) => vec![(s * x1, s * y), (v_line.unwrap(), s * y)],
            (None, Some((x, _, y2))) => vec![(s * x + dx, h_line.unwrap()), (s * x + dx, s * y2 + dy)],
            (None, None) => unreachable!("paths have a segment"),
        };
        out.insert(label, GridPath::new(q).expect("Q path is canonical"));
    }
    // keep the input's vertex order in the output
    let representation = normalized.labels().map(|l| (l, out[l].clone())).collect();
    let reorder = |x: &Representation| normalized.labels().map(|l| (l, x[l].clone())).collect();
    Transformed {
        representation,
        lines,
        r1: reorder(&r1),
        r2: reorder(&r2),
        normalized,
        scale: s,
        offset,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fig2_fixture, kmn_monotonic, star_b0};

    fn rep(paths: &[(&str, &[(i64, i64)])]) -> Representation {
        paths
            .iter()
            .map(|(l, pts)| (*l, GridPath::new(pts.iter().copied()).unwrap()))
            .collect()
    }

    #[test]
    fn separation_examples() {
        assert!(check_collinear_separation(&fig2_fixture().1).is_empty());
        assert!(check_collinear_separation(&kmn_monotonic(3, 3).unwrap().1).is_empty());
        let touch = rep(&[("p", &[(0, 0), (2, 0)]), ("q", &[(2, 0), (4, 0)])]);
        assert_eq!(
            check_collinear_separation(&touch),
            vec![Conflict {
                kind: ConflictKind::CollinearPointTouch,
                vertices: ("p".into(), "q".into()),
                location: GridPoint::new(2, 0),
            }]
        );
        let n = normalize(&touch);
        assert!(check_collinear_separation(&n).is_empty());
        assert_eq!(n["p"].points(), &[GridPoint::new(0, 0), GridPoint::new(5, 0)]);
        assert_eq!(n["q"].points(), &[GridPoint::new(7, 0), GridPoint::new(12, 0)]);
    }

    #[test]
    fn star_stays_straight() {
        for n in 1..=10 {
            let (g, r) = star_b0(n).unwrap();
            let t = b1_to_b3m(&r).unwrap();
            assert_eq!(t.representation.max_bends(), 0);
            assert_eq!(derived_graph(&t.representation), g);
        }
    }

    #[test]
    fn fig2_becomes_monotone() {
        let (g, r) = fig2_fixture();
        let t = b1_to_b3m(&r).unwrap();
        let rep = validate(&t.representation, &g, Some(3), true).unwrap();
        assert!(rep.ok, "{rep:?}");
        for (l, p) in r.iter() {
            assert_eq!(t.representation[l].bends(), 3 * p.bends(), "{l}");
        }
        assert_eq!(t.lines.len(), 7);
        assert!(t.lines.iter().all(|a| a.v_line.is_some() || a.h_line.is_some()));
    }

    #[test]
    fn corner_touch_is_refused() {
        let r = rep(&[("v", &[(0, 2), (2, 2), (2, 4)]), ("w", &[(2, 0), (2, 2), (4, 2)])]);
        match b1_to_b3m(&r) {
            Err(TransformError::Conflict(c)) => assert!(!c.is_empty()),
            other => panic!("expected a conflict, got {other:?}"),
        }
        let raw = b1_to_b3m_unchecked(&r).unwrap();
        let d = derived_graph(&raw.representation);
        assert!(d.has_edge("v", "w"), "the unchecked construction creates a spurious edge");
    }

    #[test]
    fn rejects_two_bends() {
        let r = rep(&[("x", &[(0, 0), (1, 0), (1, 1), (2, 1)])]);
        assert_eq!(
            b1_to_b3m(&r).unwrap_err(),
            TransformError::NotB1 { vertex: "x".into(), bends: 2 }
        );
    }

    #[test]
    fn left_attached_vertical() {
        // vertical hangs off the left end of the horizontal
        let r = rep(&[
            ("p", &[(0, 3), (0, 0), (4, 0)]),
            ("q", &[(2, 0), (6, 0)]),
            ("z", &[(0, 2), (0, 5)]),
        ]);
        let g = derived_graph(&r);
        assert!(g.has_edge("p", "q") && g.has_edge("p", "z"));
        let t = b1_to_b3m(&r).unwrap();
        assert!(validate(&t.representation, &g, Some(3), true).unwrap().ok);
    }
}

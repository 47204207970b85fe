//! Grid points, unit grid edges and canonical axis-aligned paths.
//!
//! A [`GridPath`] is stored as a polyline of its start point, its bend points
//! and its end point. Every constructor goes through [`canonicalize_path`], so a
//! `GridPath` value always satisfies the invariants:
//!
//! * at least two points (one grid edge or more),
//! * consecutive points differ in exactly one coordinate,
//! * no three consecutive points are collinear (every interior point is a bend),
//! * the unit-edge expansion never visits a grid point twice.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Intersection of a vertical and a horizontal grid line.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct GridPoint {
    pub col: i64,
    pub row: i64,
}

impl GridPoint {
    pub const fn new(col: i64, row: i64) -> Self {
        Self { col, row }
    }

    pub fn translate(self, dc: i64, dr: i64) -> Self {
        Self::new(self.col + dc, self.row + dr)
    }
}

impl From<(i64, i64)> for GridPoint {
    fn from((col, row): (i64, i64)) -> Self {
        Self::new(col, row)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Horizontal => Orientation::Vertical,
            Orientation::Vertical => Orientation::Horizontal,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Horizontal => "horizontal",
            Orientation::Vertical => "vertical",
        })
    }
}

/// A unit grid edge. The smaller endpoint is always stored first, so two
/// edges compare equal exactly when they cover the same piece of grid line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridEdge {
    a: GridPoint,
    b: GridPoint,
}

impl GridEdge {
    /// Returns `None` unless `p` and `q` are grid neighbours.
    pub fn new(p: GridPoint, q: GridPoint) -> Option<Self> {
        let dc = (p.col - q.col).abs();
        let dr = (p.row - q.row).abs();
        if dc + dr != 1 {
            return None;
        }
        Some(if p <= q { Self { a: p, b: q } } else { Self { a: q, b: p } })
    }

    pub fn a(&self) -> GridPoint {
        self.a
    }

    pub fn b(&self) -> GridPoint {
        self.b
    }

    pub fn orientation(&self) -> Orientation {
        if self.a.row == self.b.row {
            Orientation::Horizontal
        } else {
            Orientation::Vertical
        }
    }
}

impl fmt::Display for GridEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path needs at least two distinct grid points")]
    EmptyOrDegenerate,
    #[error("consecutive points {0} and {1} are not on a common grid line")]
    Diagonal(GridPoint, GridPoint),
    #[error("path visits grid point {0} twice")]
    SelfIntersecting(GridPoint),
}

/// A vertex-simple axis-aligned path in canonical polyline form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridPath {
    points: Vec<GridPoint>,
}

/// Builds the canonical form of a polyline.
///
/// Repeated consecutive points are dropped, collinear runs are merged and the
/// unit-edge expansion is checked for repeated grid points. The edge set of
/// the result equals the edge set of the input polyline.
pub fn canonicalize_path<I, P>(points: I) -> Result<GridPath, PathError>
where
    I: IntoIterator<Item = P>,
    P: Into<GridPoint>,
{
    let mut pts: Vec<GridPoint> = Vec::new();
    for p in points {
        let p = p.into();
        if pts.last() != Some(&p) {
            pts.push(p);
        }
    }
    if pts.len() < 2 {
        return Err(PathError::EmptyOrDegenerate);
    }
    for w in pts.windows(2) {
        if w[0].col != w[1].col && w[0].row != w[1].row {
            return Err(PathError::Diagonal(w[0], w[1]));
        }
    }

    // Vertex-simplicity has to be checked before merging, since merging a
    // backtracking run would hide the repeated point.
    let mut seen = HashSet::new();
    seen.insert(pts[0]);
    for w in pts.windows(2) {
        for p in expand_span(w[0], w[1]).skip(1) {
            if !seen.insert(p) {
                return Err(PathError::SelfIntersecting(p));
            }
        }
    }

    let mut canon: Vec<GridPoint> = Vec::with_capacity(pts.len());
    for p in pts {
        if canon.len() >= 2 {
            let a = canon[canon.len() - 2];
            let b = canon[canon.len() - 1];
            if (a.col == b.col && b.col == p.col) || (a.row == b.row && b.row == p.row) {
                *canon.last_mut().unwrap() = p;
                continue;
            }
        }
        canon.push(p);
    }
    Ok(GridPath { points: canon })
}

/// Grid points from `p` to `q` inclusive; `p` and `q` share a grid line.
fn expand_span(p: GridPoint, q: GridPoint) -> impl Iterator<Item = GridPoint> {
    let dc = (q.col - p.col).signum();
    let dr = (q.row - p.row).signum();
    let len = (q.col - p.col).abs() + (q.row - p.row).abs();
    (0..=len).map(move |t| GridPoint::new(p.col + dc * t, p.row + dr * t))
}

impl GridPath {
    pub fn new<I, P>(points: I) -> Result<Self, PathError>
    where
        I: IntoIterator<Item = P>,
        P: Into<GridPoint>,
    {
        canonicalize_path(points)
    }

    /// Straight path between two points on a common grid line.
    pub fn segment(p: impl Into<GridPoint>, q: impl Into<GridPoint>) -> Result<Self, PathError> {
        canonicalize_path([p.into(), q.into()])
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn start(&self) -> GridPoint {
        self.points[0]
    }

    pub fn end(&self) -> GridPoint {
        self.points[self.points.len() - 1]
    }

    pub fn bends(&self) -> usize {
        self.points.len() - 2
    }

    pub fn bend_points(&self) -> &[GridPoint] {
        &self.points[1..self.points.len() - 1]
    }

    /// Number of unit grid edges.
    pub fn len(&self) -> usize {
        self.points
            .windows(2)
            .map(|w| ((w[1].col - w[0].col).abs() + (w[1].row - w[0].row).abs()) as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Unit-edge expansion in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = GridEdge> + '_ {
        self.grid_points()
            .zip(self.grid_points().skip(1))
            .map(|(p, q)| GridEdge::new(p, q).expect("consecutive expansion points are adjacent"))
    }

    /// Every grid point visited by the path, in order.
    pub fn grid_points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        std::iter::once(self.points[0]).chain(
            self.points
                .windows(2)
                .flat_map(|w| expand_span(w[0], w[1]).skip(1)),
        )
    }

    pub fn edge_set(&self) -> HashSet<GridEdge> {
        self.edges().collect()
    }

    pub fn reversed(&self) -> Self {
        let mut points = self.points.clone();
        points.reverse();
        Self { points }
    }

    pub fn translated(&self, dc: i64, dr: i64) -> Self {
        Self {
            points: self.points.iter().map(|p| p.translate(dc, dr)).collect(),
        }
    }

    /// Multiplies every coordinate by `factor` (> 0). Bends and simplicity
    /// are preserved.
    pub fn scaled(&self, factor: i64) -> Self {
        assert!(factor > 0, "scale factor must be positive");
        Self {
            points: self
                .points
                .iter()
                .map(|p| GridPoint::new(p.col * factor, p.row * factor))
                .collect(),
        }
    }

    /// Orientation of the first segment in stored order.
    pub fn first_orientation(&self) -> Orientation {
        if self.points[0].row == self.points[1].row {
            Orientation::Horizontal
        } else {
            Orientation::Vertical
        }
    }

    /// True when some traversal order is non-decreasing in both coordinates.
    pub fn is_monotonic(&self) -> bool {
        self.ascending().is_some()
    }

    /// The path in ascending (bottom-left to top-right) traversal order, if
    /// it is monotonic.
    pub fn ascending(&self) -> Option<GridPath> {
        let up = |pts: &[GridPoint]| {
            pts.windows(2)
                .all(|w| w[1].col >= w[0].col && w[1].row >= w[0].row)
        };
        if up(&self.points) {
            Some(self.clone())
        } else {
            let rev = self.reversed();
            up(&rev.points).then_some(rev)
        }
    }

    /// Inclusive bounding box `(min, max)`.
    pub fn bounds(&self) -> (GridPoint, GridPoint) {
        bounding_box(self.points.iter().copied()).expect("paths are nonempty")
    }
}

pub(crate) fn bounding_box(
    points: impl IntoIterator<Item = GridPoint>,
) -> Option<(GridPoint, GridPoint)> {
    let mut it = points.into_iter();
    let first = it.next()?;
    Some(it.fold((first, first), |(lo, hi), p| {
        (
            GridPoint::new(lo.col.min(p.col), lo.row.min(p.row)),
            GridPoint::new(hi.col.max(p.col), hi.row.max(p.row)),
        )
    }))
}

impl fmt::Display for GridPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

use serde::Serialize;

use crate::grid::{GridPath, GridPoint, Orientation};

use super::AnalysisError;

/// Maximal straight piece of a path.
///
/// `line` is the row of a horizontal segment or the column of a vertical one;
/// `span` is the closed interval covered along that line, with `span.0 < span.1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Segment {
    pub orientation: Orientation,
    pub line: i64,
    pub span: (i64, i64),
    pub owner: String,
    pub index: usize,
}

impl Segment {
    fn point_at(&self, t: i64) -> GridPoint {
        match self.orientation {
            Orientation::Horizontal => GridPoint::new(t, self.line),
            Orientation::Vertical => GridPoint::new(self.line, t),
        }
    }

    /// Grid points strictly between the span endpoints.
    pub fn interior(&self) -> impl Iterator<Item = GridPoint> + '_ {
        (self.span.0 + 1..self.span.1).map(|t| self.point_at(t))
    }

    pub fn in_interior(&self, p: GridPoint) -> bool {
        let (along, across) = match self.orientation {
            Orientation::Horizontal => (p.col, p.row),
            Orientation::Vertical => (p.row, p.col),
        };
        across == self.line && self.span.0 < along && along < self.span.1
    }

    pub fn endpoints(&self) -> (GridPoint, GridPoint) {
        (self.point_at(self.span.0), self.point_at(self.span.1))
    }

    /// Number of unit grid edges covered.
    pub fn len(&self) -> i64 {
        self.span.1 - self.span.0
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Segments of `p` in traversal order.
pub fn segments(p: &GridPath, owner: &str) -> Vec<Segment> {
    p.points()
        .windows(2)
        .enumerate()
        .map(|(index, w)| {
            let (a, b) = (w[0], w[1]);
            let (orientation, line, s, t) = if a.row == b.row {
                (Orientation::Horizontal, a.row, a.col, b.col)
            } else {
                (Orientation::Vertical, a.col, a.row, b.row)
            };
            Segment {
                orientation,
                line,
                span: (s.min(t), s.max(t)),
                owner: owner.to_owned(),
                index,
            }
        })
        .collect()
}

pub fn bend_count(p: &GridPath) -> usize {
    p.bends()
}

pub fn is_monotonic(p: &GridPath) -> bool {
    p.is_monotonic()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PairClass {
    Alignment,
    Crossing,
    Pseudocrossing,
    CollinearOverlap,
    ParallelDisjointLines,
}

/// Classifies two segments of distinct paths.
///
/// Every perpendicular pair that is not a crossing counts as a
/// pseudocrossing, however far apart the two segments are.
pub fn classify_pair(s1: &Segment, s2: &Segment) -> Result<PairClass, AnalysisError> {
    if s1.owner == s2.owner {
        return Err(AnalysisError::SameOwner(s1.owner.clone()));
    }
    Ok(if s1.orientation == s2.orientation {
        if s1.line != s2.line {
            PairClass::ParallelDisjointLines
        } else if s1.span.0.max(s2.span.0) < s1.span.1.min(s2.span.1) {
            PairClass::CollinearOverlap
        } else {
            PairClass::Alignment
        }
    } else {
        let (h, v) = if s1.orientation == Orientation::Horizontal {
            (s1, s2)
        } else {
            (s2, s1)
        };
        let meet = GridPoint::new(v.line, h.line);
        if h.in_interior(meet) && v.in_interior(meet) {
            PairClass::Crossing
        } else {
            PairClass::Pseudocrossing
        }
    })
}

/// Number of horizontal and vertical segments.
pub fn orientation_counts(p: &GridPath) -> (usize, usize) {
    let n = p.points().len() - 1;
    let (first, second) = (n.div_ceil(2), n / 2);
    match p.first_orientation() {
        Orientation::Horizontal => (first, second),
        Orientation::Vertical => (second, first),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(o: Orientation, line: i64, span: (i64, i64), owner: &str) -> Segment {
        Segment { orientation: o, line, span, owner: owner.into(), index: 0 }
    }
    use Orientation::{Horizontal as H, Vertical as V};

    #[test]
    fn decomposition() {
        let p = GridPath::new([(0, 0), (3, 0), (3, 2)]).unwrap();
        let s = segments(&p, "x");
        assert_eq!(s.len(), 2);
        assert_eq!((s[0].orientation, s[0].line, s[0].span), (H, 0, (0, 3)));
        assert_eq!((s[1].orientation, s[1].line, s[1].span), (V, 3, (0, 2)));
        assert_eq!(s[1].index, 1);

        let unit = segments(&GridPath::segment((4, 4), (5, 4)).unwrap(), "u");
        assert_eq!(unit.len(), 1);
        assert_eq!(unit[0].interior().count(), 0);

        let h = seg(H, 2, (1, 3), "h");
        assert_eq!(h.interior().collect::<Vec<_>>(), vec![GridPoint::new(2, 2)]);
    }

    #[test]
    fn reversed_spans_are_normalized() {
        let p = GridPath::new([(3, 2), (3, 0), (0, 0)]).unwrap();
        let s = segments(&p, "x");
        assert_eq!(s[0].span, (0, 2));
        assert_eq!(s[1].span, (0, 3));
        assert_eq!(orientation_counts(&p), (1, 1));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_pair(&seg(V, 0, (1, 2), "p"), &seg(V, 0, (3, 4), "q")).unwrap(),
            PairClass::Alignment
        );
        assert_eq!(
            classify_pair(&seg(H, 2, (1, 3), "p"), &seg(V, 2, (1, 3), "q")).unwrap(),
            PairClass::Crossing
        );
        assert_eq!(
            classify_pair(&seg(H, 1, (0, 1), "p"), &seg(V, 2, (2, 3), "q")).unwrap(),
            PairClass::Pseudocrossing
        );
    }

    #[test]
    fn other_classes() {
        assert_eq!(
            classify_pair(&seg(H, 0, (0, 2), "p"), &seg(H, 0, (1, 3), "q")).unwrap(),
            PairClass::CollinearOverlap
        );
        assert_eq!(
            classify_pair(&seg(H, 0, (0, 2), "p"), &seg(H, 0, (2, 3), "q")).unwrap(),
            PairClass::Alignment
        );
        assert_eq!(
            classify_pair(&seg(H, 0, (0, 2), "p"), &seg(H, 1, (0, 2), "q")).unwrap(),
            PairClass::ParallelDisjointLines
        );
        // T-junction: the meeting point is a segment end, not interior to both
        assert_eq!(
            classify_pair(&seg(H, 0, (0, 4), "p"), &seg(V, 2, (0, 3), "q")).unwrap(),
            PairClass::Pseudocrossing
        );
        assert!(matches!(
            classify_pair(&seg(H, 0, (0, 4), "p"), &seg(V, 2, (0, 3), "p")),
            Err(AnalysisError::SameOwner(_))
        ));
    }
}

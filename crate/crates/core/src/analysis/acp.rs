use serde::Serialize;

use crate::grid::{GridPath, Orientation};
use crate::representation::Representation;

use super::segment::{classify_pair, orientation_counts, segments, PairClass, Segment};
use super::validate::derived_graph;
use super::AnalysisError;

/// Alignment, crossing and pseudocrossing counts over unordered pairs of
/// segments from distinct paths.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct AcpCounts {
    pub a: u64,
    pub c: u64,
    pub p: u64,
}

impl std::ops::AddAssign for AcpCounts {
    fn add_assign(&mut self, o: Self) {
        self.a += o.a;
        self.c += o.c;
        self.p += o.p;
    }
}

fn tally(s1: &[Segment], s2: &[Segment]) -> AcpCounts {
    let mut n = AcpCounts::default();
    for x in s1 {
        for y in s2 {
            match classify_pair(x, y).expect("distinct owners") {
                PairClass::Alignment => n.a += 1,
                PairClass::Crossing => n.c += 1,
                PairClass::Pseudocrossing => n.p += 1,
                PairClass::ParallelDisjointLines => {}
                PairClass::CollinearOverlap => unreachable!("caller rejects intersecting paths"),
            }
        }
    }
    n
}

/// Counts a, c and p over the whole family. The paths must pairwise share no
/// grid edge.
pub fn count_acp(r: &Representation) -> Result<AcpCounts, AnalysisError> {
    if let Some((u, v)) = derived_graph(r).edges().next() {
        return Err(AnalysisError::IntersectingInput(u.to_owned(), v.to_owned()));
    }
    let segs: Vec<Vec<Segment>> = r.iter().map(|(l, p)| segments(p, l)).collect();
    let mut total = AcpCounts::default();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            total += tally(&segs[i], &segs[j]);
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairBoundsReport {
    pub k: usize,
    pub counts: AcpCounts,
    pub same_start_orientation: bool,
    pub c_plus_p_bound: u64,
    pub c_plus_p_bound_ok: bool,
    /// Only evaluated when both paths are monotonic.
    pub a_plus_c_bound: Option<u64>,
    pub a_plus_c_bound_ok: Option<bool>,
}

/// Start orientation: the first segment in ascending order for monotonic
/// paths, in stored order otherwise.
fn start_orientation(p: &GridPath) -> Orientation {
    p.ascending().unwrap_or_else(|| p.clone()).first_orientation()
}

/// Checks the pairwise bounds on crossings, pseudocrossings and alignments of
/// two non-intersecting paths with at most `k` bends each.
pub fn check_pair_bounds(
    p1: &GridPath,
    p2: &GridPath,
    k: usize,
) -> Result<PairBoundsReport, AnalysisError> {
    for p in [p1, p2] {
        if p.bends() > k {
            return Err(AnalysisError::TooManyBends { bends: p.bends(), k });
        }
    }
    let (s1, s2) = (segments(p1, "p1"), segments(p2, "p2"));
    if s1
        .iter()
        .any(|x| s2.iter().any(|y| classify_pair(x, y) == Ok(PairClass::CollinearOverlap)))
    {
        return Err(AnalysisError::IntersectingInput("p1".into(), "p2".into()));
    }
    let counts = tally(&s1, &s2);
    let same = start_orientation(p1) == start_orientation(p2);

    let segs = k as u64 + 1;
    let (fl, ce) = (segs / 2, segs.div_ceil(2));
    let c_plus_p_bound = if same {
        2 * fl * ce
    } else {
        2 * fl * ce + (ce - fl) * (ce - fl)
    };
    let a_plus_c_bound = (p1.is_monotonic() && p2.is_monotonic())
        .then_some(if same { k as u64 } else { k as u64 + 1 });

    Ok(PairBoundsReport {
        k,
        counts,
        same_start_orientation: same,
        c_plus_p_bound,
        c_plus_p_bound_ok: counts.c + counts.p <= c_plus_p_bound,
        a_plus_c_bound,
        a_plus_c_bound_ok: a_plus_c_bound.map(|b| counts.a + counts.c <= b),
    })
}

/// Perpendicular segment pairs between two paths: h1·v2 + v1·h2.
pub fn perpendicular_pairs(p1: &GridPath, p2: &GridPath) -> u64 {
    let (h1, v1) = orientation_counts(p1);
    let (h2, v2) = orientation_counts(p2);
    (h1 * v2 + v1 * h2) as u64
}

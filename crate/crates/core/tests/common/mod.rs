#![allow(dead_code)]

use epg_core::analysis::paths_intersect;
use epg_core::transform::{check_collinear_separation, normalize};
use epg_core::{GridPath, GridPoint, Representation};
use rand::Rng;

/// Random monotone path with at most `k` bends, ascending from `start`.
pub fn monotone_path(rng: &mut impl Rng, k: usize, start: GridPoint) -> GridPath {
    let segs = rng.gen_range(1..=k + 1);
    let mut horizontal = rng.gen_bool(0.5);
    let mut p = start;
    let mut pts = vec![p];
    for _ in 0..segs {
        let len = rng.gen_range(1..=3);
        p = if horizontal { p.translate(len, 0) } else { p.translate(0, len) };
        pts.push(p);
        horizontal = !horizontal;
    }
    let path = GridPath::new(pts).expect("ascending staircases are simple");
    if rng.gen_bool(0.5) {
        path.reversed()
    } else {
        path
    }
}

/// Pair of monotone, non-intersecting paths with at most `k` bends each.
pub fn monotone_pair(rng: &mut impl Rng, k: usize) -> (GridPath, GridPath) {
    loop {
        let p1 = monotone_path(rng, k, GridPoint::new(0, 0));
        let s = GridPoint::new(rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        let p2 = monotone_path(rng, k, s);
        if !paths_intersect(&p1, &p2) {
            return (p1, p2);
        }
    }
}

/// Random path with at most one bend inside a small box.
pub fn b1_path(rng: &mut impl Rng, size: i64) -> Option<GridPath> {
    let start = GridPoint::new(rng.gen_range(0..size), rng.gen_range(0..size));
    let mut dir = [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)];
    let mut pts = vec![start];
    let mut p = start;
    for seg in 0..rng.gen_range(1..=2) {
        if seg == 1 {
            dir = if rng.gen_bool(0.5) { (dir.1, dir.0) } else { (-dir.1, -dir.0) };
        }
        let len = rng.gen_range(1..=4);
        p = p.translate(dir.0 * len, dir.1 * len);
        pts.push(p);
    }
    GridPath::new(pts).ok()
}

/// Random 1-bend representation on up to `max_vertices` vertices whose
/// normalized form has no collinear point touches.
pub fn conflict_free_b1(rng: &mut impl Rng, max_vertices: usize) -> Representation {
    loop {
        let n = rng.gen_range(2..=max_vertices);
        let mut r = Representation::new();
        for i in 0..n {
            loop {
                if let Some(p) = b1_path(rng, 6) {
                    r.insert(format!("v{i}"), p);
                    break;
                }
            }
        }
        if check_collinear_separation(&normalize(&r)).is_empty() {
            return r;
        }
    }
}

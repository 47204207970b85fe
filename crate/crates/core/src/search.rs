//! Exhaustive search for a bounded-bend representation of a small graph
//! inside a fixed grid.
//!
//! Exhaustion is relative to the grid and bend budget only; it never proves
//! that a graph has no representation at all.

use std::collections::{BTreeMap, HashSet};

use thiserror::Error;

use crate::analysis::validate;
use crate::graph::Graph;
use crate::grid::{GridPath, GridPoint};
use crate::representation::Representation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_bends: usize,
    /// Grid points per row.
    pub grid_cols: usize,
    /// Grid points per column.
    pub grid_rows: usize,
    pub monotonic: bool,
    pub node_limit: Option<u64>,
}

impl SearchBudget {
    pub fn new(max_bends: usize, grid_cols: usize, grid_rows: usize) -> Self {
        Self { max_bends, grid_cols, grid_rows, monotonic: false, node_limit: None }
    }

    pub fn monotonic(mut self, yes: bool) -> Self {
        self.monotonic = yes;
        self
    }

    pub fn node_limit(mut self, limit: Option<u64>) -> Self {
        self.node_limit = limit;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid budget: {0}")]
    Budget(String),
    #[error("search produced a representation that fails validation")]
    Unsound,
    #[error("node limit reached at {k} bends")]
    NodeLimit { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Representation),
    ExhaustedWithinBudget,
    NodeLimitHit,
}

/// Largest supported vertex count (owners are tracked as a 64-bit mask).
pub const MAX_VERTICES: usize = 64;

struct Grid {
    cols: i64,
    rows: i64,
}

impl Grid {
    fn contains(&self, p: GridPoint) -> bool {
        (0..self.cols).contains(&p.col) && (0..self.rows).contains(&p.row)
    }

    fn horizontal_edges(&self) -> i64 {
        (self.cols - 1) * self.rows
    }

    fn edge_count(&self) -> usize {
        (self.horizontal_edges() + self.cols * (self.rows - 1)) as usize
    }

    fn edge_id(&self, a: GridPoint, b: GridPoint) -> u32 {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if a.row == b.row {
            (a.row * (self.cols - 1) + a.col) as u32
        } else {
            (self.horizontal_edges() + a.row * self.cols + a.col) as u32
        }
    }

    fn edge_ids(&self, p: &GridPath) -> Vec<u32> {
        let mut ids: Vec<u32> = p.edges().map(|e| self.edge_id(e.a(), e.b())).collect();
        ids.sort_unstable();
        ids
    }

    /// Grid symmetries as point maps. Reflections are left out for monotone
    /// searches since they turn ascending staircases into descending ones.
    fn symmetries(&self, monotonic: bool) -> Vec<Box<dyn Fn(GridPoint) -> GridPoint>> {
        let (w, h) = (self.cols - 1, self.rows - 1);
        let mut out: Vec<Box<dyn Fn(GridPoint) -> GridPoint>> = vec![
            Box::new(|p| p),
            Box::new(move |p: GridPoint| GridPoint::new(w - p.col, h - p.row)),
        ];
        if !monotonic {
            out.push(Box::new(move |p: GridPoint| GridPoint::new(w - p.col, p.row)));
            out.push(Box::new(move |p: GridPoint| GridPoint::new(p.col, h - p.row)));
        }
        if w == h {
            out.push(Box::new(|p: GridPoint| GridPoint::new(p.row, p.col)));
            out.push(Box::new(move |p: GridPoint| GridPoint::new(w - p.row, h - p.col)));
            if !monotonic {
                out.push(Box::new(move |p: GridPoint| GridPoint::new(p.row, w - p.col)));
                out.push(Box::new(move |p: GridPoint| GridPoint::new(h - p.row, p.col)));
            }
        }
        out
    }
}

struct Candidate {
    path: GridPath,
    edges: Vec<u32>,
}

/// Every path inside the grid with at most `max_bends` bends, one per edge
/// set (a path and its reversal count once), in a fixed order.
fn enumerate_paths(grid: &Grid, max_bends: usize, monotonic: bool) -> Vec<Candidate> {
    const DIRS: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();

    fn extend(
        grid: &Grid,
        pts: &mut Vec<GridPoint>,
        dir: (i64, i64),
        bends_left: usize,
        emit: &mut dyn FnMut(&[GridPoint]),
    ) {
        let start = *pts.last().unwrap();
        let mut len = 1;
        loop {
            let p = start.translate(dir.0 * len, dir.1 * len);
            if !grid.contains(p) {
                break;
            }
            pts.push(p);
            emit(pts);
            if bends_left > 0 {
                for turn in [(dir.1, dir.0), (-dir.1, -dir.0)] {
                    extend(grid, pts, turn, bends_left - 1, emit);
                }
            }
            pts.pop();
            len += 1;
        }
    }

    let mut emit = |pts: &[GridPoint]| {
        let Ok(path) = GridPath::new(pts.iter().copied()) else { return };
        if monotonic && !path.is_monotonic() {
            return;
        }
        let edges = grid.edge_ids(&path);
        if seen.insert(edges.clone()) {
            out.push(Candidate { path, edges });
        }
    };
    for row in 0..grid.rows {
        for col in 0..grid.cols {
            for dir in DIRS {
                let mut pts = vec![GridPoint::new(col, row)];
                extend(grid, &mut pts, dir, max_bends, &mut emit);
            }
        }
    }
    out
}

struct State<'a> {
    order: Vec<usize>,
    /// Neighbour mask of each vertex (by index into `order`'s vertex list).
    adj: Vec<u64>,
    candidates: &'a [Candidate],
    first: Vec<usize>,
    occupancy: Vec<u64>,
    chosen: Vec<usize>,
    nodes: u64,
    limit: Option<u64>,
}

enum Step {
    Found,
    Exhausted,
    Limit,
}

impl State<'_> {
    fn run(&mut self, depth: usize) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        let v = self.order[depth];
        let placed: u64 = self.order[..depth].iter().fold(0, |m, &u| m | 1 << u);
        let want = self.adj[v] & placed;
        let pool: Vec<usize> = if depth == 0 {
            self.first.clone()
        } else {
            (0..self.candidates.len()).collect()
        };
        for ci in pool {
            self.nodes += 1;
            if self.limit.is_some_and(|l| self.nodes > l) {
                return Step::Limit;
            }
            let c = &self.candidates[ci];
            let hit = c.edges.iter().fold(0u64, |m, &e| m | self.occupancy[e as usize]);
            if hit != want {
                continue;
            }
            for &e in &c.edges {
                self.occupancy[e as usize] |= 1 << v;
            }
            self.chosen[v] = ci;
            match self.run(depth + 1) {
                Step::Exhausted => {}
                done => return done,
            }
            for &e in &c.edges {
                self.occupancy[e as usize] &= !(1 << v);
            }
        }
        Step::Exhausted
    }
}

pub fn find_representation(g: &Graph, budget: &SearchBudget) -> Result<SearchOutcome, SearchError> {
    search(g, budget, true)
}

/// Same search without restricting the first path to symmetry-orbit
/// representatives. Slower; used as a reference.
pub fn find_representation_unreduced(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<SearchOutcome, SearchError> {
    search(g, budget, false)
}

fn search(g: &Graph, budget: &SearchBudget, reduce: bool) -> Result<SearchOutcome, SearchError> {
    if budget.grid_cols < 1 || budget.grid_rows < 1 {
        return Err(SearchError::Budget("grid dimensions must be at least 1".into()));
    }
    if g.vertex_count() > MAX_VERTICES {
        return Err(SearchError::Budget(format!("at most {MAX_VERTICES} vertices supported")));
    }
    let grid = Grid { cols: budget.grid_cols as i64, rows: budget.grid_rows as i64 };
    let labels = g.vertices();
    if labels.is_empty() {
        return Ok(SearchOutcome::Found(Representation::new()));
    }
    let index: BTreeMap<&str, usize> =
        labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut adj = vec![0u64; labels.len()];
    for (a, b) in g.edges() {
        let (i, j) = (index[a], index[b]);
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.sort_by(|&x, &y| {
        adj[y].count_ones().cmp(&adj[x].count_ones()).then_with(|| labels[x].cmp(&labels[y]))
    });

    let candidates = enumerate_paths(&grid, budget.max_bends, budget.monotonic);
    let first: Vec<usize> = if reduce {
        let syms = grid.symmetries(budget.monotonic);
        (0..candidates.len())
            .filter(|&i| {
                let c = &candidates[i];
                syms.iter().all(|f| {
                    let image = GridPath::new(c.path.points().iter().map(|&p| f(p)))
                        .expect("symmetries keep paths valid");
                    grid.edge_ids(&image) >= c.edges
                })
            })
            .collect()
    } else {
        (0..candidates.len()).collect()
    };

    let mut state = State {
        order,
        adj,
        candidates: &candidates,
        first,
        occupancy: vec![0; grid.edge_count()],
        chosen: vec![usize::MAX; labels.len()],
        nodes: 0,
        limit: budget.node_limit,
    };
    match state.run(0) {
        Step::Exhausted => Ok(SearchOutcome::ExhaustedWithinBudget),
        Step::Limit => Ok(SearchOutcome::NodeLimitHit),
        Step::Found => {
            let r: Representation = labels
                .iter()
                .enumerate()
                .map(|(i, l)| (l.as_str(), candidates[state.chosen[i]].path.clone()))
                .collect();
            let report = validate(&r, g, Some(budget.max_bends), budget.monotonic)
                .map_err(|_| SearchError::Unsound)?;
            if !report.ok {
                return Err(SearchError::Unsound);
            }
            Ok(SearchOutcome::Found(r))
        }
    }
}

/// Smallest `k <= k_max` for which the search finds a representation with
/// the template's grid and monotonicity settings.
pub fn bend_number_upto(
    g: &Graph,
    k_max: usize,
    template: &SearchBudget,
) -> Result<Option<usize>, SearchError> {
    for k in 0..=k_max {
        let budget = SearchBudget { max_bends: k, ..*template };
        match find_representation(g, &budget)? {
            SearchOutcome::Found(_) => return Ok(Some(k)),
            SearchOutcome::ExhaustedWithinBudget => {}
            SearchOutcome::NodeLimitHit => return Err(SearchError::NodeLimit { k }),
        }
    }
    Ok(None)
}

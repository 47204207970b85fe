//! SVG and ASCII drawings of representations.

use std::collections::HashMap;
use std::fmt::Write as _;

use epg_core::analysis::segments;
use epg_core::{GridEdge, GridPoint, Orientation, Representation};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("cell size must be at least 4, got {0}")]
    CellSize(u32),
    #[error("extent {cols}x{rows} exceeds the ASCII limit of {max_cols}x{max_rows}")]
    TooLarge { cols: i64, rows: i64, max_cols: i64, max_rows: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    /// Draw paths sharing a grid line side by side instead of on top of each
    /// other.
    pub offset_collinear: bool,
    /// Pixels per grid unit.
    pub cell_size: u32,
    pub labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self { offset_collinear: false, cell_size: 24, labels: false }
    }
}

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
    "#bcbd22", "#7f7f7f",
];

type Line = (Orientation, i64);
/// (path index, segment index)
type SegmentId = (usize, usize);

/// Slot of every segment on its grid line, by greedy interval colouring in
/// span order: segments that overlap in at least one edge get different slots.
fn segment_slots(r: &Representation) -> (HashMap<SegmentId, i64>, HashMap<Line, i64>) {
    let mut lines: HashMap<Line, Vec<(i64, i64, usize, usize)>> = HashMap::new();
    for (pi, (label, p)) in r.iter().enumerate() {
        for s in segments(p, label) {
            lines
                .entry((s.orientation, s.line))
                .or_default()
                .push((s.span.0, s.span.1, pi, s.index));
        }
    }
    let mut slot = HashMap::new();
    let mut width = HashMap::new();
    for (key, mut segs) in lines {
        segs.sort_unstable();
        let mut ends: Vec<i64> = Vec::new();
        for (lo, hi, pi, si) in segs {
            let free = ends.iter().position(|&e| e <= lo);
            let k = match free {
                Some(k) => {
                    ends[k] = hi;
                    k
                }
                None => {
                    ends.push(hi);
                    ends.len() - 1
                }
            };
            slot.insert((pi, si), k as i64);
        }
        width.insert(key, ends.len() as i64);
    }
    (slot, width)
}

pub fn render_svg(r: &Representation, opts: &RenderOptions) -> Result<String, RenderError> {
    if opts.cell_size < 4 {
        return Err(RenderError::CellSize(opts.cell_size));
    }
    let cell = opts.cell_size as f64;
    let (lo, hi) = r.extent().unwrap_or((GridPoint::new(0, 0), GridPoint::new(1, 1)));
    let margin = cell;
    let w = (hi.col - lo.col) as f64 * cell + 2.0 * margin;
    let h = (hi.row - lo.row) as f64 * cell + 2.0 * margin;
    let px = |c: i64| margin + (c - lo.col) as f64 * cell;
    let py = |row: i64| margin + (hi.row - row) as f64 * cell;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    out.push_str("<g stroke=\"#dddddd\" stroke-width=\"1\">\n");
    for c in lo.col..=hi.col {
        let _ = writeln!(
            out,
            r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}"/>"#,
            py(hi.row),
            py(lo.row),
            x = px(c)
        );
    }
    for row in lo.row..=hi.row {
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}"/>"#,
            px(lo.col),
            px(hi.col),
            y = py(row)
        );
    }
    out.push_str("</g>\n");

    let (slots, widths) = segment_slots(r);
    let step = cell * 0.15;
    let shift = |pi: usize, si: usize, o: Orientation, line: i64| -> f64 {
        if !opts.offset_collinear {
            return 0.0;
        }
        let k = slots[&(pi, si)] as f64;
        let n = widths[&(o, line)] as f64;
        (k - (n - 1.0) / 2.0) * step
    };
    for (pi, (label, p)) in r.iter().enumerate() {
        let segs = segments(p, label);
        let mut coords = Vec::with_capacity(p.points().len());
        for (i, pt) in p.points().iter().enumerate() {
            let (mut dx, mut dy) = (0.0, 0.0);
            for s in [i.checked_sub(1), (i < segs.len()).then_some(i)].into_iter().flatten() {
                let seg = &segs[s];
                let d = shift(pi, s, seg.orientation, seg.line);
                match seg.orientation {
                    Orientation::Horizontal => dy = -d,
                    Orientation::Vertical => dx = d,
                }
            }
            coords.push(format!("{:.2},{:.2}", px(pt.col) + dx, py(pt.row) + dy));
        }
        let colour = PALETTE[pi % PALETTE.len()];
        let _ = writeln!(
            out,
            r#"<polyline data-vertex="{}" points="{}" fill="none" stroke="{colour}" stroke-width="2"/>"#,
            escape(label),
            coords.join(" ")
        );
        if opts.labels {
            let s = p.start();
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-size="{:.0}" fill="{colour}">{}</text>"#,
                px(s.col) + 2.0,
                py(s.row) - 2.0,
                cell * 0.5,
                escape(label)
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub const ASCII_MAX_COLS: i64 = 200;
pub const ASCII_MAX_ROWS: i64 = 60;

/// Character drawing: `-` and `|` for edges used by one path, `#` for
/// shared edges, `+` where horizontal and vertical edges meet.
pub fn render_ascii(r: &Representation) -> Result<String, RenderError> {
    let Some((lo, hi)) = r.extent() else { return Ok(String::new()) };
    let (cols, rows) = (hi.col - lo.col + 1, hi.row - lo.row + 1);
    if cols > ASCII_MAX_COLS || rows > ASCII_MAX_ROWS {
        return Err(RenderError::TooLarge {
            cols,
            rows,
            max_cols: ASCII_MAX_COLS,
            max_rows: ASCII_MAX_ROWS,
        });
    }
    let mut use_count: HashMap<GridEdge, usize> = HashMap::new();
    for (_, p) in r.iter() {
        for e in p.edges() {
            *use_count.entry(e).or_default() += 1;
        }
    }
    let (w, h) = (2 * (cols - 1) + 1, 2 * (rows - 1) + 1);
    let mut canvas = vec![vec![' '; w as usize]; h as usize];
    let cell = |p: GridPoint| ((2 * (p.col - lo.col)) as usize, (2 * (hi.row - p.row)) as usize);

    let mut at_point: HashMap<GridPoint, (bool, bool, bool)> = HashMap::new();
    for (&e, &n) in &use_count {
        let (x1, y1) = cell(e.a());
        let (x2, y2) = cell(e.b());
        let glyph = match (n > 1, e.orientation()) {
            (true, _) => '#',
            (false, Orientation::Horizontal) => '-',
            (false, Orientation::Vertical) => '|',
        };
        canvas[(y1 + y2) / 2][(x1 + x2) / 2] = glyph;
        for p in [e.a(), e.b()] {
            let m = at_point.entry(p).or_default();
            match e.orientation() {
                Orientation::Horizontal => m.0 = true,
                Orientation::Vertical => m.1 = true,
            }
            m.2 |= n > 1;
        }
    }
    for (p, (hz, vt, shared)) in at_point {
        let (x, y) = cell(p);
        canvas[y][x] = match (hz, vt, shared) {
            (true, true, _) => '+',
            (_, _, true) => '#',
            (true, false, false) => '-',
            _ => '|',
        };
    }
    let mut out = String::new();
    for line in canvas {
        let s: String = line.into_iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    Ok(out)
}

//! Command implementations for the `epg` binary.

pub mod render;

use std::fs;
use std::path::{Path, PathBuf};

use epg_core::analysis::{count_acp, validate_document};
use epg_core::bounds::{self, BoundError};
use epg_core::constructions;
use epg_core::search::{bend_number_upto, find_representation, SearchBudget, SearchOutcome};
use epg_core::transform::{b1_to_b3m, check_collinear_separation, normalize, TransformError};
use epg_core::{
    graph_to_json, parse_graph, parse_representation, representation_to_json, Graph,
    Representation,
};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

pub use render::{render_ascii, render_svg, RenderError, RenderOptions};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Unsupported(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Unsupported(_) => 3,
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Range(_) => CliError::Usage(e.to_string()),
            BoundError::UnsupportedM(_) => CliError::Unsupported(e.to_string()),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

pub fn load_representation(path: &Path) -> Result<Representation, CliError> {
    parse_representation(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Writes to `path`, or returns the text for stdout when `path` is absent.
pub fn emit(path: Option<&Path>, text: String) -> Result<Option<String>, CliError> {
    match path {
        Some(p) => fs::write(p, text)
            .map(|_| None)
            .map_err(|source| CliError::Io { path: p.to_owned(), source }),
        None => Ok(Some(text)),
    }
}

pub fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

pub enum Construct {
    Star { n: usize },
    Kmn { m: usize, n: usize },
    H1 { size: usize },
    H2,
    Fig2,
}

pub fn construct(which: Construct) -> Result<(Graph, Representation), CliError> {
    Ok(match which {
        Construct::Star { n } => constructions::star_b0(n).map_err(usage)?,
        Construct::Kmn { m, n } => constructions::kmn_monotonic(m, n).map_err(usage)?,
        Construct::H1 { size } => (
            constructions::h1_graph_sized(size).map_err(usage)?,
            constructions::h1_b2_representation_sized(size).map_err(usage)?,
        ),
        Construct::H2 => constructions::h2_graph(),
        Construct::Fig2 => constructions::fig2_fixture(),
    })
}

/// Validation report as JSON; `Failed` when the report is not ok.
pub fn validate_files(
    graph: &Path,
    rep: &Path,
    max_bends: Option<usize>,
    monotonic: bool,
) -> Result<String, CliError> {
    let g = load_graph(graph)?;
    let report = validate_document(&read(rep)?, &g, max_bends, monotonic)
        .map_err(|e| usage(format!("{}: {e}", rep.display())))?
        .map_err(usage)?;
    let text = to_json(&report);
    if report.ok {
        Ok(text)
    } else {
        Err(CliError::Failed(text))
    }
}

pub fn analyze(r: &Representation, vertices: Option<&[String]>) -> Result<String, CliError> {
    let per_vertex: Vec<_> = r
        .iter()
        .map(|(l, p)| json!({ "vertex": l, "bends": p.bends(), "monotonic": p.is_monotonic() }))
        .collect();
    let subset = match vertices {
        Some(vs) => {
            for v in vs {
                if r.get(v).is_none() {
                    return Err(usage(format!("unknown vertex {v:?}")));
                }
            }
            r.subset(vs.iter().map(String::as_str))
        }
        None => r.clone(),
    };
    let acp = match count_acp(&subset) {
        Ok(c) => json!(c),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let (lo, hi) = r.extent().unwrap_or_default();
    Ok(to_json(&json!({
        "vertices": per_vertex,
        "max_bends": r.max_bends(),
        "all_monotonic": r.all_monotonic(),
        "extent": { "min": [lo.col, lo.row], "max": [hi.col, hi.row] },
        "acp_vertices": subset.labels().collect::<Vec<_>>(),
        "acp": acp,
    })))
}

pub enum BoundQuery {
    Lbl1 { m: u64, n: u64, k: u64 },
    Lbl { m: u64, n: u64, k: u64, c: u64 },
    Acp { m: u64, n: u64, k: u64, a: u64, c: u64, p: u64 },
    Mlbl { m: u64, n: u64, k: u64 },
    Mlbl2 { m: u64, n: u64, k: u64 },
    Threshold { m: u64 },
    Heldt { m: u64 },
    Verdict { m: u64, n: u64, k: u64, monotonic: bool },
}

pub fn bounds(q: BoundQuery) -> Result<String, CliError> {
    Ok(match q {
        BoundQuery::Lbl1 { m, n, k } => to_json(&bounds::lbl1(m, n, k)?),
        BoundQuery::Lbl { m, n, k, c } => to_json(&bounds::lbl_crossings(m, n, k, c)?),
        BoundQuery::Acp { m, n, k, a, c, p } => to_json(&bounds::acp_lower(m, n, k, a, c, p)?),
        BoundQuery::Mlbl { m, n, k } => to_json(&bounds::mlbl(m, n, k)?),
        BoundQuery::Mlbl2 { m, n, k } => to_json(&bounds::mlbl2(m, n, k)?),
        BoundQuery::Threshold { m } => {
            to_json(&json!({ "m": m, "threshold": bounds::threshold_b2m3(m)?.to_string() }))
        }
        BoundQuery::Heldt { m } => to_json(&json!({ "m": m, "n": bounds::heldt_n(m)? })),
        BoundQuery::Verdict { m, n, k, monotonic } => {
            let v = bounds::verdict(m, n, k, monotonic)?;
            to_json(&json!({ "m": m, "n": n, "k": k, "monotonic": monotonic,
                "in_class": v.in_class.to_string(), "reason": v.reason }))
        }
    })
}

pub enum TransformMode {
    Full,
    NormalizeOnly,
    CheckOnly,
}

/// Returns the main output and, for the full transform, the line table.
pub fn transform(r: &Representation, mode: TransformMode) -> Result<(String, Option<String>), CliError> {
    match mode {
        TransformMode::NormalizeOnly => Ok((representation_to_json(&normalize(r)), None)),
        TransformMode::CheckOnly => {
            let conflicts = check_collinear_separation(&normalize(r));
            let text = to_json(&conflicts);
            if conflicts.is_empty() {
                Ok((text, None))
            } else {
                Err(CliError::Unsupported(text))
            }
        }
        TransformMode::Full => match b1_to_b3m(r) {
            Ok(t) => Ok((representation_to_json(&t.representation), Some(to_json(&t.lines)))),
            Err(e @ TransformError::Conflict(_)) | Err(e @ TransformError::NotB1 { .. }) => {
                Err(CliError::Unsupported(e.to_string()))
            }
            Err(e @ TransformError::InvalidOutput(_)) => Err(CliError::Failed(e.to_string())),
        },
    }
}

/// Parses `WxH` (grid points per row x per column).
pub fn parse_grid(s: &str) -> Result<(usize, usize), CliError> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| usage(format!("grid must look like WxH, got {s:?}")))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| usage(format!("bad grid size {s:?}")));
    Ok((num(w)?, num(h)?))
}

pub fn search(g: &Graph, budget: &SearchBudget, upto: Option<usize>) -> Result<String, CliError> {
    if let Some(k_max) = upto {
        return match bend_number_upto(g, k_max, budget) {
            Ok(Some(k)) => Ok(to_json(&json!({ "bend_number_upto": k }))),
            Ok(None) => Err(CliError::Failed(format!(
                "no representation with at most {k_max} bends inside the grid"
            ))),
            Err(e) => Err(CliError::Failed(e.to_string())),
        };
    }
    match find_representation(g, budget).map_err(usage)? {
        SearchOutcome::Found(r) => Ok(representation_to_json(&r)),
        SearchOutcome::ExhaustedWithinBudget => {
            Err(CliError::Failed("exhausted: no representation within the budget".into()))
        }
        SearchOutcome::NodeLimitHit => Err(CliError::Failed("node limit reached".into())),
    }
}

pub fn graph_document(g: &Graph) -> String {
    graph_to_json(g)
}

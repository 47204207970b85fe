use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use epg_cli::{
    analyze, bounds, construct, emit, graph_document, load_graph, load_representation,
    parse_grid, render_ascii, render_svg, search, transform, validate_files, BoundQuery, CliError,
    Construct, RenderOptions, TransformMode,
};
use epg_core::representation_to_json;
use epg_core::search::SearchBudget;

#[derive(Parser)]
#[command(name = "epg", version, about = "Edge-intersection representations by paths on a grid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and a representation of it.
    Construct {
        #[command(subcommand)]
        which: ConstructCmd,
        /// Representation output (stdout if absent).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
        /// Also write the graph document here.
        #[arg(long, global = true)]
        graph: Option<PathBuf>,
    },
    /// Check a representation against a graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        max_bends: Option<usize>,
        #[arg(long)]
        monotonic: bool,
    },
    /// Bends, monotonicity and alignment/crossing/pseudocrossing counts.
    Analyze {
        #[arg(long)]
        rep: PathBuf,
        /// Comma-separated vertices to count over (all if absent).
        #[arg(long, value_delimiter = ',')]
        vertices: Option<Vec<String>>,
    },
    /// Evaluate an inequality or look up a known membership fact.
    Bounds {
        #[command(subcommand)]
        which: BoundsCmd,
    },
    /// Turn a 1-bend representation into a monotone 3-bend one.
    Transform {
        #[command(subcommand)]
        which: TransformCmd,
    },
    /// Exhaustive search inside a grid.
    Search {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        max_bends: usize,
        /// Grid points per row x per column.
        #[arg(long, default_value = "6x6")]
        grid: String,
        #[arg(long)]
        monotonic: bool,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Report the smallest bend count up to this value instead.
        #[arg(long)]
        upto: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a representation.
    Render {
        #[command(subcommand)]
        which: RenderCmd,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    Star {
        #[arg(long)]
        n: usize,
    },
    Kmn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    H1 {
        #[arg(long, default_value_t = 50)]
        size: usize,
    },
    H2,
    Fig2,
}

#[derive(Args)]
struct Mnk {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
}

#[derive(Subcommand)]
enum BoundsCmd {
    Lbl1(Mnk),
    Lbl {
        #[command(flatten)]
        mnk: Mnk,
        #[arg(long)]
        c: u64,
    },
    Acp {
        #[command(flatten)]
        mnk: Mnk,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        p: u64,
    },
    Mlbl(Mnk),
    Mlbl2(Mnk),
    Threshold {
        #[arg(long)]
        m: u64,
    },
    Heldt {
        #[arg(long)]
        m: u64,
    },
    Verdict {
        #[command(flatten)]
        mnk: Mnk,
        #[arg(long)]
        monotonic: bool,
    },
}

#[derive(Subcommand)]
enum TransformCmd {
    #[command(name = "b1-to-b3m")]
    B1ToB3m {
        #[arg(long)]
        rep: PathBuf,
        /// Only emit the normalized input.
        #[arg(long, conflicts_with = "check_only")]
        normalize: bool,
        /// Only report collinear point touches left after normalization.
        #[arg(long)]
        check_only: bool,
        /// Write the fresh-line table here.
        #[arg(long)]
        lines: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RenderCmd {
    Svg {
        #[arg(long)]
        rep: PathBuf,
        /// Offset paths sharing a grid line.
        #[arg(long)]
        offset: bool,
        #[arg(long, default_value_t = 24)]
        cell: u32,
        #[arg(long)]
        labels: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Ascii {
        #[arg(long)]
        rep: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Option<String>, CliError> {
    match cli.command {
        Command::Construct { which, output, graph } => {
            let which = match which {
                ConstructCmd::Star { n } => Construct::Star { n },
                ConstructCmd::Kmn { m, n } => Construct::Kmn { m, n },
                ConstructCmd::H1 { size } => Construct::H1 { size },
                ConstructCmd::H2 => Construct::H2,
                ConstructCmd::Fig2 => Construct::Fig2,
            };
            let (g, r) = construct(which)?;
            if let Some(path) = graph.as_deref() {
                emit(Some(path), graph_document(&g))?;
            }
            emit(output.as_deref(), representation_to_json(&r))
        }
        Command::Validate { graph, rep, max_bends, monotonic } => {
            validate_files(&graph, &rep, max_bends, monotonic).map(Some)
        }
        Command::Analyze { rep, vertices } => {
            analyze(&load_representation(&rep)?, vertices.as_deref()).map(Some)
        }
        Command::Bounds { which } => {
            let q = match which {
                BoundsCmd::Lbl1(Mnk { m, n, k }) => BoundQuery::Lbl1 { m, n, k },
                BoundsCmd::Lbl { mnk: Mnk { m, n, k }, c } => BoundQuery::Lbl { m, n, k, c },
                BoundsCmd::Acp { mnk: Mnk { m, n, k }, a, c, p } => {
                    BoundQuery::Acp { m, n, k, a, c, p }
                }
                BoundsCmd::Mlbl(Mnk { m, n, k }) => BoundQuery::Mlbl { m, n, k },
                BoundsCmd::Mlbl2(Mnk { m, n, k }) => BoundQuery::Mlbl2 { m, n, k },
                BoundsCmd::Threshold { m } => BoundQuery::Threshold { m },
                BoundsCmd::Heldt { m } => BoundQuery::Heldt { m },
                BoundsCmd::Verdict { mnk: Mnk { m, n, k }, monotonic } => {
                    BoundQuery::Verdict { m, n, k, monotonic }
                }
            };
            bounds(q).map(Some)
        }
        Command::Transform {
            which: TransformCmd::B1ToB3m { rep, normalize, check_only, lines, output },
        } => {
            let r = load_representation(&rep)?;
            let mode = if check_only {
                TransformMode::CheckOnly
            } else if normalize {
                TransformMode::NormalizeOnly
            } else {
                TransformMode::Full
            };
            let (text, table) = transform(&r, mode)?;
            if let (Some(path), Some(table)) = (lines.as_deref(), table) {
                emit(Some(path), table)?;
            }
            emit(output.as_deref(), text)
        }
        Command::Search { graph, max_bends, grid, monotonic, node_limit, upto, output } => {
            let g = load_graph(&graph)?;
            let (cols, rows) = parse_grid(&grid)?;
            let budget = SearchBudget::new(max_bends, cols, rows)
                .monotonic(monotonic)
                .node_limit(node_limit);
            let text = search(&g, &budget, upto)?;
            if upto.is_some() {
                Ok(Some(text))
            } else {
                emit(output.as_deref(), text)
            }
        }
        Command::Render { which } => match which {
            RenderCmd::Svg { rep, offset, cell, labels, output } => {
                let opts = RenderOptions { offset_collinear: offset, cell_size: cell, labels };
                let svg = render_svg(&load_representation(&rep)?, &opts)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                emit(output.as_deref(), svg)
            }
            RenderCmd::Ascii { rep, output } => {
                let text = render_ascii(&load_representation(&rep)?)
                    .map_err(|e| CliError::Unsupported(e.to_string()))?;
                emit(output.as_deref(), text)
            }
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            if let Some(text) = out {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            match &e {
                // report bodies go to stdout so they can be piped like successes
                CliError::Failed(body) | CliError::Unsupported(body) if body.starts_with(['{', '[']) => {
                    print!("{body}")
                }
                _ => eprintln!("epg: {e}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}

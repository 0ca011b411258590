//! `bandcli`: generate graphs and grid numberings, run the exact solvers, render
//! band matrices and run the verification suite.
//!
//! Exit codes: 0 on success (optimal result, all checks passed), 1 on invalid
//! input or a failed check, 2 when a search ends without proving optimality or a
//! check is inconclusive.

mod record;
mod render;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use bandred::board::GridBoard;
use bandred::constructions::{
    down_diagonal_lex, modified_board_numbering, modified_board_text,
    nonadjacent_reduction_numbering, ConstructionReport,
};
use bandred::edgelist::write_edge_list;
use bandred::numbering::bandwidth_of_numbering;
use bandred::solve::{
    exact_bandwidth, grid_reduction_number, min_long_edges, reduction_by_deletion,
    reduction_number, vertex_isoperimetric, Budget, SearchOutcome, Status, DEFAULT_VI_CAP,
};
use bandred::suite::{run_suite, SuiteConfig, Verdict};
use clap::{Args, Parser, Subcommand, ValueEnum};

use record::ResultRecord;
use source::{Family, GraphSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] bandred::Error),
}

#[derive(Parser)]
#[command(
    name = "bandcli",
    version,
    about = "Exact bandwidth tools for grids and small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph as an edge list
    Gen(GenArgs),
    /// Build a grid numbering and report its long edges
    Numbering(NumberingArgs),
    /// Run an exact solver and print a result record
    Solve(SolveArgs),
    /// Print a board file as text or as a band matrix
    Render(RenderArgs),
    /// Run the verification suite
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Graph family
    #[arg(value_enum)]
    family: Option<Family>,
    /// Family parameters; a grid takes columns then rows
    params: Vec<usize>,
    /// Read the graph from an edge-list file instead
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Grid columns
    #[arg(long)]
    cols: Option<usize>,
    /// Grid rows
    #[arg(long)]
    rows: Option<usize>,
}

impl GraphArgs {
    fn spec(&self) -> Result<GraphSpec, CliError> {
        if let Some(path) = &self.graph {
            return Ok(GraphSpec::File { path: path.clone() });
        }
        let family = match (self.family, self.cols) {
            (Some(f), _) => f,
            (None, Some(_)) => Family::Grid,
            (None, None) => {
                return Err(CliError::Usage(
                    "give a graph family or --graph FILE".into(),
                ))
            }
        };
        let params = grid_params(&self.params, self.cols, self.rows)?;
        GraphSpec::family(family, params)
    }
}

/// Positional parameters, or `[cols, rows]` from the flags.
fn grid_params(
    params: &[usize],
    cols: Option<usize>,
    rows: Option<usize>,
) -> Result<Vec<usize>, CliError> {
    match (cols, rows) {
        (None, None) => Ok(params.to_vec()),
        (Some(c), Some(r)) if params.is_empty() => Ok(vec![c, r]),
        _ => Err(CliError::Usage(
            "--cols and --rows go together and replace positional parameters".into(),
        )),
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Output file; standard output if omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum NumberingKind {
    /// Down-diagonal order of the m x n grid (params: m n)
    Ddl,
    /// Cut-and-flip numbering (params: m n k)
    Reduce,
    /// Two disjoint long edges on the n x n grid (params: n)
    Nonadjacent,
}

#[derive(Args)]
struct NumberingArgs {
    #[arg(value_enum)]
    kind: NumberingKind,
    params: Vec<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Write the grid board here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveKind {
    Bandwidth,
    /// k-th bandwidth reduction number
    Brk,
    /// Vertex-isoperimetric number
    Vi,
}

impl SolveKind {
    fn name(self) -> &'static str {
        match self {
            SolveKind::Bandwidth => "bandwidth",
            SolveKind::Brk => "brk",
            SolveKind::Vi => "vi",
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(value_enum)]
    what: SolveKind,
    #[command(flatten)]
    graph: GraphArgs,
    /// Bandwidth reduction to reach (brk)
    #[arg(long)]
    k: Option<usize>,
    /// Count edges longer than this threshold instead of `bandwidth - k` (brk)
    #[arg(long, conflicts_with = "k")]
    t: Option<usize>,
    /// Search deletion sets directly instead of numberings (brk)
    #[arg(long)]
    by_deletion: bool,
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
    /// Largest graph the vertex-isoperimetric table accepts
    #[arg(long, default_value_t = DEFAULT_VI_CAP)]
    vi_cap: usize,
    /// Append the record to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Band,
}

#[derive(Args)]
struct RenderArgs {
    board: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Band distance to mark; defaults to the board's bandwidth
    #[arg(long)]
    distance: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 40)]
    max_n: usize,
    #[arg(long, default_value_t = 1_000_000_000)]
    budget_nodes: u64,
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(args: &GenArgs) -> Result<ExitCode, CliError> {
    if args.graph.graph.is_some() {
        return Err(CliError::Usage("gen needs a family, not --graph".into()));
    }
    let g = args.graph.spec()?.build()?;
    write_output(args.out.as_ref(), &write_edge_list(&g))?;
    Ok(ExitCode::SUCCESS)
}

fn exact_params<const N: usize>(params: &[usize], usage: &str) -> Result<[usize; N], CliError> {
    params
        .try_into()
        .map_err(|_| CliError::Usage(format!("expected parameters: {usage}")))
}

fn long_edge_report(r: &ConstructionReport) -> String {
    let mut s = format!(
        "threshold {}\nlong edges {}\n",
        r.threshold,
        r.long_edges.len()
    );
    for e in &r.long_edges {
        s += &format!("{}-{} length {}\n", e.ends.0, e.ends.1, e.length);
    }
    s
}

fn numbering(args: &NumberingArgs) -> Result<ExitCode, CliError> {
    let mut params = grid_params(&args.params, args.cols, args.rows)?;
    params.extend(args.k);
    let (shown, report) = match args.kind {
        NumberingKind::Ddl => {
            let [m, n] = exact_params(&params, "m n")?;
            let nu = down_diagonal_lex(m, n)?;
            let threshold = bandwidth_of_numbering(&bandred::families::grid(m, n)?, &nu)?;
            let report = ConstructionReport::from_numbering(m, n, nu, threshold.saturating_sub(1))?;
            (report.board().to_text(), report)
        }
        NumberingKind::Reduce => {
            let [m, n, k] = exact_params(&params, "m n k")?;
            (
                modified_board_text(m, n, k)?,
                modified_board_numbering(m, n, k)?,
            )
        }
        NumberingKind::Nonadjacent => {
            let [n] = exact_params(&params, "n")?;
            let report = nonadjacent_reduction_numbering(n)?;
            (report.board().to_text(), report)
        }
    };
    print!("{shown}\n{}", long_edge_report(&report));
    if let Some(path) = &args.out {
        write_output(Some(path), &report.board().to_text())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn solve(args: &SolveArgs) -> Result<ExitCode, CliError> {
    let spec = args.graph.spec()?;
    let g = spec.build()?;
    let budget = Budget::nodes(args.budget_nodes);
    let (k, t) = match args.what {
        SolveKind::Brk if args.t.is_none() => (Some(args.k.unwrap_or(1)), None),
        SolveKind::Brk => (None, args.t),
        _ if args.k.is_some() || args.t.is_some() || args.by_deletion => {
            return Err(CliError::Usage(
                "--k, --t and --by-deletion apply to brk".into(),
            ))
        }
        _ => (None, None),
    };
    let out: SearchOutcome = match (args.what, k, t) {
        (SolveKind::Bandwidth, ..) => exact_bandwidth(&g, budget)?,
        (SolveKind::Vi, ..) => vertex_isoperimetric(&g, args.vi_cap)?,
        (SolveKind::Brk, _, Some(t)) if !args.by_deletion => min_long_edges(&g, t, budget)?,
        (SolveKind::Brk, _, Some(_)) => {
            return Err(CliError::Usage("--by-deletion needs --k".into()))
        }
        (SolveKind::Brk, Some(k), None) if args.by_deletion => {
            reduction_by_deletion(&g, k, budget)?
        }
        (SolveKind::Brk, Some(k), None) => match spec.grid_shape() {
            Some((m, n)) => grid_reduction_number(m, n, k, budget)?,
            None => reduction_number(&g, k, budget)?,
        },
        (SolveKind::Brk, None, None) => unreachable!("k defaults to 1"),
    };
    let mut rec = ResultRecord::new(args.what.name(), spec.clone(), args.budget_nodes, &out);
    rec.k = k;
    rec.t = t;
    if let (Some((m, n)), Some(w)) = (spec.grid_shape(), &out.witness) {
        rec.witness_board = Some(GridBoard::new(m, n, w.numbering().clone())?.to_text());
    }
    println!("{}", rec.to_line());
    if let Some(path) = &args.out {
        rec.append_to(path)?;
    }
    Ok(if out.status == Status::Optimal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn render(args: &RenderArgs) -> Result<ExitCode, CliError> {
    let text = std::fs::read_to_string(&args.board)
        .map_err(|e| CliError::Io(format!("{}: {e}", args.board.display())))?;
    let board = GridBoard::parse(&text)?;
    match args.format {
        Format::Ascii => {
            let g = bandred::families::grid(board.cols, board.rows)?;
            print!("{}", board.to_aligned_text());
            println!(
                "bandwidth {}",
                bandwidth_of_numbering(&g, &board.numbering)?
            );
        }
        Format::Band => {
            let max = render::band(&board, usize::MAX).max_distance;
            let d = args.distance.unwrap_or(max);
            let r = render::band(&board, d);
            for row in &r.rows {
                println!("{row}");
            }
            println!("max distance {}", r.max_distance);
            println!("pairs at distance {d}: {}", r.at_distance);
            println!("pairs beyond distance {d}: {}", r.beyond);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(args: &VerifyArgs) -> ExitCode {
    let cases = run_suite(&SuiteConfig {
        max_n: args.max_n,
        budget: Budget::nodes(args.budget_nodes),
    });
    let count = |v: Verdict| cases.iter().filter(|c| c.verdict == v).count();
    for c in &cases {
        println!(
            "[{}] {}: {} (expected {}, observed {})",
            c.verdict.as_str(),
            c.id,
            c.claim,
            c.expected,
            c.observed
        );
    }
    let (pass, fail, unknown) = (
        count(Verdict::Pass),
        count(Verdict::Fail),
        count(Verdict::Unknown),
    );
    println!("{pass} passed, {fail} failed, {unknown} unknown");
    if fail > 0 {
        ExitCode::FAILURE
    } else if unknown > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Numbering(a) => numbering(a),
        Command::Solve(a) => solve(a),
        Command::Render(a) => render(a),
        Command::Verify(a) => Ok(verify(a)),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::FAILURE
    })
}

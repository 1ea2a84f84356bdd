//! `subtree`: subtree statistics, checks, scans and reproductions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use subtree_core::census::{census, connected_set_totals, mu_at_tree, RootConstraint};
use subtree_core::generate::{generate_connected, generate_trees};
use subtree_core::harness::repro::{is_slow, run_repro, REPRO_NAMES};
use subtree_core::harness::scan::{scan, scan_to_files, OutputFormat, ScanOptions, ScanOutcome, ScanState};
use subtree_core::harness::{Analysis, CheckKind, CheckVerdict};
use subtree_core::numeric::{ratio, ratio_string, sig12, to_f64, Ratio};
use subtree_core::{from_graph6, read_graph6_lines, to_graph6, Error, FamilySpec, Graph};

const FAMILY_HELP: &str = "\
Graph sources:
  family:<kind>:<p1>[:<p2>[:<p3>]]   a named family, one of
      path:n  star:n  clique:n  cycle:n  petersen
      barbell:n:w                    two K_w joined by a path, n >= 2w
      modified_barbell:n:w:a         barbell(n-a, w) plus an a-vertex path between the hubs
      double_broom:n:w               a path with w-1 pendant leaves at each end
      modified_double_broom:n:w:a    double_broom(n-a, w) plus an a-vertex path between the hubs
      join:n:m                       K_n joined to m independent vertices
      complete_bipartite:a:b
  <graph6>                           a graph6 string, e.g. Bw for K_3
  <file> or -                        the first graph6 line of a file or stdin

Exit codes: 0 success, 1 claim mismatch or failed check, 2 usage or data error, 3 I/O error.";

#[derive(Parser)]
#[command(name = "subtree", version, about = "Exact subtree statistics of graphs", after_help = FAMILY_HELP)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Subtree counts, mean subtree order and local means of one graph.
    #[command(after_help = FAMILY_HELP)]
    Compute(ComputeArgs),
    /// Run checks over a stream of graphs.
    #[command(after_help = FAMILY_HELP)]
    Scan(ScanArgs),
    /// Run a named reproduction.
    Repro(ReproArgs),
    /// Print one graph6 line per isomorphism class of connected graphs (or trees).
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Jsonl,
    Csv,
}

#[derive(Args)]
struct ComputeArgs {
    /// Family spec, graph6 string, file, or `-` for stdin.
    source: String,
    /// Report μ(G, v) for this vertex (repeatable).
    #[arg(long = "vertex", value_name = "V")]
    vertices: Vec<usize>,
    /// Report μ(G, e) for this edge, written `u-v` (repeatable).
    #[arg(long = "edge", value_name = "U-V")]
    edges: Vec<String>,
    /// Report μ(G, T) for the tree with these edges, written `a-b,b-c,...` (repeatable).
    #[arg(long = "tree", value_name = "EDGES")]
    trees: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct ScanArgs {
    /// graph6 input file, or `-` for stdin.
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    input: Option<String>,
    /// Scan the built-in connected graphs of this order (at most 8).
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated checks, or `default` / `all`.
    #[arg(long, default_value = "default")]
    checks: String,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
    /// Output file (default: stdout).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Checkpoint file, rewritten after every chunk.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Continue from the checkpoint, appending to the output.
    #[arg(long, requires = "checkpoint", requires = "output")]
    resume: bool,
    /// Graphs per chunk between checkpoints.
    #[arg(long, default_value_t = 1000)]
    checkpoint_every: u64,
    /// Write runtime_ms = 0 so repeated runs are byte-identical.
    #[arg(long)]
    no_runtime: bool,
    /// Stop after this many graphs (at a chunk boundary).
    #[arg(long)]
    stop_after: Option<u64>,
}

#[derive(Args)]
struct ReproArgs {
    /// Reproduction name (see --list).
    #[arg(required_unless_present = "list")]
    name: Option<String>,
    /// List the available reproductions.
    #[arg(long)]
    list: bool,
    /// Allow reproductions on graphs above 20 vertices.
    #[arg(long)]
    slow: bool,
}

#[derive(Args)]
struct GenerateArgs {
    /// Order of the graphs.
    n: usize,
    /// Generate trees instead of all connected graphs (order at most 16).
    #[arg(long)]
    trees: bool,
}

enum Failure {
    Mismatch(String),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) => Failure::Io(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type CliResult<T = ()> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Scan(a) => run_scan(a),
        Command::Repro(a) => repro(a),
        Command::Generate(a) => generate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn first_graph6_line<R: BufRead>(reader: R) -> CliResult<Graph> {
    match read_graph6_lines(reader).next() {
        Some(g) => Ok(g?),
        None => Err(Failure::Usage("input contains no graph".into())),
    }
}

fn resolve_source(source: &str) -> CliResult<Graph> {
    if source.starts_with("family:") {
        return Ok(source.parse::<FamilySpec>()?.build()?);
    }
    if source == "-" {
        return first_graph6_line(io::stdin().lock());
    }
    if Path::new(source).is_file() {
        return first_graph6_line(BufReader::new(File::open(source)?));
    }
    from_graph6(source).map_err(|e| Failure::Usage(format!("`{source}` is not a family spec, file or graph6 string ({e})")))
}

fn parse_edge(s: &str) -> CliResult<(usize, usize)> {
    let bad = || Failure::Usage(format!("edge `{s}` must be written u-v"));
    let (a, b) = s.split_once('-').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn show(r: &Ratio) -> (String, String) {
    (ratio_string(r), sig12(to_f64(r)))
}

fn compute(args: ComputeArgs) -> CliResult {
    let g = resolve_source(&args.source)?;
    let c = census(&g)?;
    let mut rows: Vec<(String, String, String)> = vec![
        ("n".into(), g.order().to_string(), String::new()),
        ("m".into(), g.edge_count().to_string(), String::new()),
    ];
    for (k, s) in c.by_order.iter().enumerate() {
        rows.push((format!("s_{}", k + 1), s.to_string(), String::new()));
    }
    rows.push(("N".into(), c.total.to_string(), String::new()));
    rows.push(("R".into(), c.total_order.to_string(), String::new()));
    if !g.is_connected() {
        print_rows(&args.source, &rows, args.format)?;
        return Err(Failure::Usage("graph is disconnected; μ is undefined".into()));
    }
    let mut push = |name: String, r: &Ratio| {
        let (exact, float) = show(r);
        rows.push((name, exact, float));
    };
    push("mu".into(), &c.mu()?);
    push("p".into(), &c.spanning_fraction()?);
    let (sets, sizes) = connected_set_totals(&g);
    push("av".into(), &ratio(&sizes, &sets));
    let mut constraints = Vec::new();
    for &v in &args.vertices {
        constraints.push((format!("mu(v={v})"), RootConstraint::vertex(v)));
    }
    for e in &args.edges {
        let (u, v) = parse_edge(e)?;
        constraints.push((format!("mu(e={u}-{v})"), RootConstraint::edge(u, v)));
    }
    for t in &args.trees {
        let edges = t.split(',').map(parse_edge).collect::<CliResult<Vec<_>>>()?;
        let c = if edges.is_empty() {
            RootConstraint::none()
        } else {
            RootConstraint::tree(&edges)?
        };
        if !c.is_tree() {
            return Err(Failure::Usage(format!("`{t}` is not a tree")));
        }
        constraints.push((format!("mu(T={t})"), c));
    }
    for (name, constraint) in constraints {
        push(name, &mu_at_tree(&g, &constraint)?);
    }
    print_rows(&args.source, &rows, args.format)
}

fn print_rows(source: &str, rows: &[(String, String, String)], format: Format) -> CliResult {
    let mut out = io::stdout().lock();
    match format {
        Format::Table => {
            let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
            for (name, exact, float) in rows {
                if float.is_empty() {
                    writeln!(out, "{name:width$}  {exact}")?;
                } else {
                    writeln!(out, "{name:width$}  {exact}  ({float})")?;
                }
            }
        }
        Format::Jsonl => {
            let mut obj = serde_json::Map::new();
            obj.insert("graph".into(), source.into());
            for (name, exact, float) in rows {
                obj.insert(name.clone(), exact.clone().into());
                if !float.is_empty() {
                    obj.insert(format!("{name}_float"), float.parse::<f64>().map(Into::into).unwrap_or(serde_json::Value::Null));
                }
            }
            writeln!(out, "{}", serde_json::Value::Object(obj))?;
        }
        Format::Csv => {
            writeln!(out, "quantity,exact,float")?;
            for (name, exact, float) in rows {
                writeln!(out, "{name},{exact},{float}")?;
            }
        }
    }
    Ok(())
}

fn scan_input(args: &ScanArgs) -> CliResult<Box<dyn Iterator<Item = subtree_core::Result<Graph>>>> {
    if let Some(n) = args.n {
        let gs = generate_connected(n)?;
        return Ok(Box::new(gs.into_iter().map(Ok)));
    }
    let path = args.input.as_deref().expect("clap enforces a source");
    let reader: Box<dyn BufRead> = if path == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        Box::new(BufReader::new(File::open(path)?))
    };
    Ok(Box::new(read_graph6_lines(reader)))
}

fn run_scan(args: ScanArgs) -> CliResult {
    let checks = CheckKind::parse_list(&args.checks)?;
    let input = scan_input(&args)?;
    if args.format == Format::Table {
        if args.checkpoint.is_some() || args.output.is_some() {
            return Err(Failure::Usage("table output goes to stdout and cannot be checkpointed".into()));
        }
        return scan_table(input, &checks, !args.no_runtime);
    }
    let opts = ScanOptions {
        checks,
        checkpoint_every: args.checkpoint_every,
        record_runtime: !args.no_runtime,
        stop_after: args.stop_after,
        format: if args.format == Format::Csv { OutputFormat::Csv } else { OutputFormat::Jsonl },
    };
    let (state, outcome) = match &args.output {
        Some(path) => scan_to_files(input, &opts, path, args.checkpoint.as_deref(), args.resume)?,
        None => {
            let mut state = ScanState::default();
            let mut out = BufWriter::new(io::stdout().lock());
            let checkpoint = args.checkpoint.as_deref();
            let outcome = scan(input, &opts, &mut state, &mut out, |s| match checkpoint {
                Some(p) => s.save(p),
                None => Ok(()),
            })?;
            out.flush()?;
            (state, outcome)
        }
    };
    summarize(&state, outcome)
}

fn summarize(state: &ScanState, outcome: ScanOutcome) -> CliResult {
    let mut err = io::stderr().lock();
    writeln!(
        err,
        "{} graphs{}",
        state.position,
        if outcome == ScanOutcome::Interrupted { " (stopped early)" } else { "" }
    )?;
    for (check, t) in &state.tallies {
        writeln!(
            err,
            "{check:24} holds {:6}  fails {:6}  report-only {:6}  violations {:6}",
            t.holds, t.fails, t.report_only, t.violations
        )?;
    }
    if state.total_fails() > 0 {
        return Err(Failure::Mismatch(format!("{} failed checks", state.total_fails())));
    }
    Ok(())
}

fn scan_table(
    input: Box<dyn Iterator<Item = subtree_core::Result<Graph>>>,
    checks: &[CheckKind],
    record_runtime: bool,
) -> CliResult {
    let graphs = input.collect::<subtree_core::Result<Vec<_>>>()?;
    let verdicts: Vec<Vec<CheckVerdict>> = graphs
        .par_iter()
        .map(|g| {
            let a = Analysis::new(g)?.record_runtime(record_runtime);
            checks.iter().map(|k| k.run(&a)).collect()
        })
        .collect::<subtree_core::Result<_>>()?;
    let mut out = io::stdout().lock();
    let mut fails = 0;
    writeln!(out, "{:24} {:12} {:11} {:9} {:>14}", "check", "graph", "status", "violation", "mu")?;
    for v in verdicts.iter().flatten() {
        fails += (v.status == subtree_core::harness::Status::Fails) as usize;
        writeln!(
            out,
            "{:24} {:12} {:11} {:9} {:>14}",
            v.check,
            v.graph,
            v.status.as_str(),
            v.violation,
            v.mu_float.map(sig12).unwrap_or_default()
        )?;
    }
    if fails > 0 {
        return Err(Failure::Mismatch(format!("{fails} failed checks")));
    }
    Ok(())
}

fn repro(args: ReproArgs) -> CliResult {
    if args.list {
        for name in REPRO_NAMES {
            println!("{name}{}", if is_slow(name) { " (slow)" } else { "" });
        }
        return Ok(());
    }
    let name = args.name.expect("clap enforces a name");
    let report = run_repro(&name, args.slow)?;
    for line in &report.lines {
        println!("{line}");
    }
    if report.reproduced {
        println!("{name}: reproduced");
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{name}: NOT reproduced")))
    }
}

fn generate(args: GenerateArgs) -> CliResult {
    let graphs = if args.trees { generate_trees(args.n)? } else { generate_connected(args.n)? };
    let mut out = BufWriter::new(io::stdout().lock());
    for g in &graphs {
        writeln!(out, "{}", to_graph6(g)?)?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_syntax() {
        assert_eq!(parse_edge("3-7").ok(), Some((3, 7)));
        assert!(parse_edge("3").is_err());
        assert!(parse_edge("a-b").is_err());
    }

    #[test]
    fn sources() {
        assert_eq!(resolve_source("Bw").ok().map(|g| g.edge_count()), Some(3));
        assert_eq!(resolve_source("family:path:5").ok().map(|g| g.order()), Some(5));
        assert!(resolve_source("family:nope:3").is_err());
        assert!(resolve_source("not graph6 !").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

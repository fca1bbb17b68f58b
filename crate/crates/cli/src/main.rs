//! `sgdraw`: decide, check, generate and classify signed-graph drawings.
//!
//! Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or input
//! error, 3 internal inconsistency.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sgdraw::bench::{self, BenchModel};
use sgdraw::format::{emit_drawing, emit_graph, parse_drawing_exact, parse_drawing_float, parse_graph, to_dot};
use sgdraw::grid::integerize;
use sgdraw::{
    check_valid, cluster_drawing, decide_complete, decide_line_bruteforce, is_balanced, is_clusterizable,
    Certificate, DecisionResult, OracleConfig, PatternId, Scalar, SignedGraph, ValidityReport, Witness,
};

#[derive(Parser)]
#[command(name = "sgdraw", version, about = "Valid drawings of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph has a valid drawing in the line.
    Decide(DecideArgs),
    /// Check a drawing against a graph.
    Check(CheckArgs),
    /// Write a named pattern as a graph file.
    Gen(GenArgs),
    /// Report balance, clusterability and line drawability.
    Classify(ClassifyArgs),
    /// Time the complete-graph decision and print CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct DecideArgs {
    /// Graph file.
    graph: PathBuf,
    /// Use the polynomial decision for complete graphs.
    #[arg(long, conflicts_with = "oracle")]
    complete: bool,
    /// Use the exhaustive search.
    #[arg(long)]
    oracle: bool,
    /// Cap on prefixes expanded by the exhaustive search; lifts its
    /// vertex bound.
    #[arg(long)]
    limit: Option<u64>,
    /// Also write the certificate drawing here.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    graph: PathBuf,
    drawing: PathBuf,
    /// Exact rational arithmetic (default).
    #[arg(long, conflicts_with = "float")]
    exact: bool,
    /// Floating-point arithmetic with strict comparisons.
    #[arg(long)]
    float: bool,
}

#[derive(Args)]
struct GenArgs {
    /// f1:n,k | f2:n | f3:n | f4:n | neg-triangle | neg-cluster | cycle-k:n,k
    pattern: String,
    /// Output graph file.
    out: PathBuf,
    /// Also write Graphviz DOT next to the output (extension `.dot`).
    #[arg(long)]
    dot: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    graph: PathBuf,
    /// Cap on prefixes expanded by the exhaustive search.
    #[arg(long)]
    limit: Option<u64>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', default_value = "250,500,1000,2000")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// unit-interval | uniform
    #[arg(long, default_value_t = BenchModel::UnitInterval)]
    model: BenchModel,
    /// Print the fitted growth exponent to stderr.
    #[arg(long)]
    fit: bool,
}

/// Failure that ends a command with the given exit code.
struct Fail(u8, String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(2, e.to_string())
    }
}

type CmdResult = Result<u8, Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Decide(a) => decide(a),
        Command::Check(a) => check(a),
        Command::Gen(a) => gen(a),
        Command::Classify(a) => classify(a),
        Command::Bench(a) => run_bench(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("sgdraw: {msg}");
            ExitCode::from(code)
        }
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<SignedGraph, Fail> {
    parse_graph(&read(path)?).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn oracle_config(limit: Option<u64>) -> OracleConfig {
    OracleConfig {
        limit,
        ..OracleConfig::default()
    }
}

fn certificate_text(method: &str, c: &Certificate) -> String {
    format!(
        "# drawable ({method})\n# ordering: {}\n{}",
        c.ordering,
        emit_drawing(&c.drawing)
    )
}

fn decide(a: DecideArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let use_complete = a.complete || (!a.oracle && g.is_complete());
    let (method, result) = if use_complete {
        ("complete-graph decision", decide_complete(&g)?)
    } else {
        let r = decide_line_bruteforce(&g, &oracle_config(a.limit))?;
        let result = match r.certificate {
            Some(c) => DecisionResult::Drawable(c),
            None => DecisionResult::NotDrawable(Witness::SearchExhausted {
                orderings_tested: r.orderings_tested,
            }),
        };
        ("exhaustive search", result)
    };
    match result {
        DecisionResult::Drawable(c) => {
            let text = certificate_text(method, &c);
            print!("{text}");
            if let Some(out) = a.output {
                fs::write(&out, &text).map_err(|e| Fail(2, format!("{}: {e}", out.display())))?;
            }
            Ok(0)
        }
        DecisionResult::NotDrawable(w) => {
            println!("not drawable, {w}");
            Ok(1)
        }
    }
}

fn print_report<T: Scalar>(r: &ValidityReport<T>) {
    if r.is_valid() {
        println!("valid");
        return;
    }
    println!("invalid");
    for (u, v) in &r.coincident {
        println!("coincident: {u} {v}");
    }
    for v in &r.violations {
        println!(
            "{}: pos {} at d²={} vs neg {} at d²={}",
            v.vertex, v.pos, v.pos_dist2, v.neg, v.neg_dist2
        );
    }
}

fn check(a: CheckArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let text = read(&a.drawing)?;
    let with_path = |e: sgdraw::Error| Fail(2, format!("{}: {e}", a.drawing.display()));
    let valid = if a.float {
        let d = parse_drawing_float(&text).map_err(with_path)?;
        let r = check_valid(&g, &d)?;
        print_report(&r);
        r.is_valid()
    } else {
        let d = parse_drawing_exact(&text).map_err(with_path)?;
        let r = check_valid(&g, &d)?;
        print_report(&r);
        r.is_valid()
    };
    Ok(if valid { 0 } else { 1 })
}

fn gen(a: GenArgs) -> CmdResult {
    let p: PatternId = a.pattern.parse()?;
    let g = p.generate()?;
    fs::write(&a.out, emit_graph(&g)).map_err(|e| Fail(2, format!("{}: {e}", a.out.display())))?;
    if a.dot {
        let path = a.out.with_extension("dot");
        fs::write(&path, to_dot(&g)).map_err(|e| Fail(2, format!("{}: {e}", path.display())))?;
    }
    Ok(0)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify(a: ClassifyArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let balanced = is_balanced(&g).is_some();
    let clustering = is_clusterizable(&g);
    let (method, certificate) = if g.is_complete() {
        ("complete-graph decision", decide_complete(&g)?.certificate().map(|c| c.drawing.clone()))
    } else {
        match decide_line_bruteforce(&g, &oracle_config(a.limit)) {
            Ok(r) => ("exhaustive search", r.certificate.map(|c| c.drawing)),
            Err(e) => match &clustering {
                // too large to search, but clusters already give a drawing
                Some(c) => ("cluster layout", Some(cluster_drawing(&g, c)?)),
                None => return Err(e.into()),
            },
        }
    };
    let drawable = certificate.is_some();

    let mut out = String::new();
    writeln!(out, "balanced: {}", yes_no(balanced)).expect("String");
    writeln!(out, "clusterizable: {}", yes_no(clustering.is_some())).expect("String");
    writeln!(out, "line-drawable: {} ({method})", yes_no(drawable)).expect("String");
    if let Some(d) = &certificate {
        if !check_valid(&g, d)?.is_valid() {
            return Err(Fail(3, "certificate drawing failed re-verification".into()));
        }
        out.push_str(&emit_drawing(&integerize(d)));
    }
    print!("{out}");

    if (balanced && clustering.is_none()) || (clustering.is_some() && !drawable) {
        return Err(Fail(3, "inclusion chain balanced => clusterizable => drawable violated".into()));
    }
    Ok(if drawable { 0 } else { 1 })
}

fn run_bench(a: BenchArgs) -> CmdResult {
    let rows = bench::run(&a.sizes, a.trials, a.seed, a.model)?;
    print!("{}", bench::to_csv(&rows));
    if a.fit {
        match bench::fit_exponent(&rows) {
            Some(e) => eprintln!("exponent: {e:.3}"),
            None => eprintln!("exponent: needs at least two sizes with trials"),
        }
    }
    Ok(0)
}

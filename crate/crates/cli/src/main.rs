use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fermat_zagreb::generators::{
    self, bicyclic_delta_formula, enumerate_bicyclic_with_cap, enumerate_free_trees_with_cap,
    enumerate_unicyclic_with_cap, multicyclic_delta_formula, BICYCLIC_CAP, FREE_TREE_CAP,
    UNICYCLIC_CAP,
};
use fermat_zagreb::verify::{search_counterexample, sweep_class_with_cap, SearchConfig, Strategy};
use fermat_zagreb::{full_report, graph6, parse_edge_list, ClassTag, Error, ErrorKind, Graph};

mod output;

use output::{Format, Rendered};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_INCOMPLETE: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

/// Fermat eccentricities, Zagreb-Fermat indices and checks of their
/// average inequality.
#[derive(Debug, Parser)]
#[command(name = "fermat-zagreb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for random families and the random-walk search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Allow orders above the enumeration caps.
    #[arg(long, global = true)]
    force: bool,
    /// Directory for witness graphs (edge list plus JSON report).
    #[arg(long, global = true)]
    witness_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report eps3 and all index values of one graph.
    Compute {
        /// Edge-list or graph6 file.
        #[arg(long, required_unless_present = "family", conflicts_with = "family")]
        input: Option<PathBuf>,
        /// path:N, cycle:N, star:N, random-tree:N, random-unicyclic:N:GIRTH
        /// or random-connected:N:EXTRA.
        #[arg(long)]
        family: Option<String>,
    },
    /// Run every check over all trees or unicyclic graphs in an order range.
    Verify {
        #[arg(value_enum)]
        class: SweepClass,
        /// Inclusive order range such as 2..9.
        range: String,
    },
    /// Report every isomorphism class of one order.
    Enumerate {
        #[arg(value_enum)]
        class: EnumClass,
        n: usize,
    },
    /// Evaluate a closed-form difference F1/n - F2/m.
    Formula {
        #[command(subcommand)]
        which: FormulaCmd,
    },
    /// Look for graphs on both sides of the average comparison.
    Search {
        /// exhaustive-small, family-sweep or random-walk.
        strategy: String,
        #[arg(long, default_value_t = SearchConfig::DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = BICYCLIC_CAP)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SweepClass {
    Tree,
    Unicyclic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnumClass {
    Tree,
    Unicyclic,
    Bicyclic,
}

#[derive(Debug, Subcommand)]
enum FormulaCmd {
    Bicyclic { x: u64 },
    Multicyclic { k: u64, x: u64 },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(path: &Path, err: io::Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: format!("{}: {err}", path.display()),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Parse | ErrorKind::Validation => EXIT_INPUT,
            ErrorKind::Usage => EXIT_USAGE,
            ErrorKind::Internal => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run_with_threads(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run_with_threads(cli: &Cli) -> CliResult<u8> {
    match cli.threads {
        None => run(cli),
        Some(0) => Err(Failure::usage("--threads must be at least 1")),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Failure::internal(e.to_string()))?
            .install(|| run(cli)),
    }
}

fn run(cli: &Cli) -> CliResult<u8> {
    let (rendered, code) = match &cli.command {
        Command::Compute { input, family } => {
            let (name, g) = match (input, family) {
                (Some(path), _) => (input_name(path), read_graph(path)?),
                (None, Some(spec)) => (spec.clone(), family_graph(spec, cli.seed)?),
                (None, None) => return Err(Failure::usage("compute needs --input or --family")),
            };
            let report = full_report(&g)?;
            (output::report(cli.format, &name, &report)?, 0)
        }
        Command::Verify { class, range } => {
            let (lo, hi) = parse_range(range)?;
            let (tag, cap) = match class {
                SweepClass::Tree => (ClassTag::Tree, FREE_TREE_CAP),
                SweepClass::Unicyclic => (ClassTag::Unicyclic, UNICYCLIC_CAP),
            };
            let cap = if cli.force { usize::MAX } else { cap };
            let summary = sweep_class_with_cap(tag, lo..=hi, cap)?;
            if !summary.passed() {
                if let Some(dir) = &cli.witness_dir {
                    let mut written = Vec::new();
                    for f in &summary.failures {
                        if written.contains(&f.instance) {
                            continue;
                        }
                        if let Ok(g) = graph6::decode(&f.instance) {
                            write_witness(dir, &format!("failure-{:03}", written.len()), &g)?;
                            written.push(f.instance.clone());
                        }
                    }
                }
            }
            let code = if summary.passed() {
                0
            } else {
                EXIT_VERIFY_FAILED
            };
            (output::sweep(cli.format, &summary)?, code)
        }
        Command::Enumerate { class, n } => {
            let graphs: Vec<Graph> = match class {
                EnumClass::Tree => {
                    enumerate_free_trees_with_cap(*n, cap(cli, FREE_TREE_CAP))?.collect()
                }
                EnumClass::Unicyclic => enumerate_unicyclic_with_cap(*n, cap(cli, UNICYCLIC_CAP))?,
                EnumClass::Bicyclic => enumerate_bicyclic_with_cap(*n, cap(cli, BICYCLIC_CAP))?,
            };
            let named: Vec<(String, Graph)> = graphs
                .into_iter()
                .map(|g| (graph6::encode(&g), g))
                .collect();
            (output::reports(cli.format, &named)?, 0)
        }
        Command::Formula { which } => {
            let (name, params, value) = match *which {
                FormulaCmd::Bicyclic { x } => {
                    ("bicyclic", vec![("x", x)], bicyclic_delta_formula(x))
                }
                FormulaCmd::Multicyclic { k, x } => (
                    "multicyclic",
                    vec![("k", k), ("x", x)],
                    multicyclic_delta_formula(k, x)?,
                ),
            };
            (output::formula(cli.format, name, &params, &value)?, 0)
        }
        Command::Search {
            strategy,
            budget,
            max_n,
        } => {
            let strategy: Strategy = strategy.parse()?;
            let mut cfg = SearchConfig::new(strategy);
            cfg.budget = *budget;
            cfg.seed = cli.seed;
            cfg.max_n = *max_n;
            cfg.cap = cap(cli, BICYCLIC_CAP);
            let summary = search_counterexample(&cfg)?;
            if let Some(dir) = &cli.witness_dir {
                for (label, found) in [
                    ("positive", &summary.positive),
                    ("negative", &summary.negative),
                ] {
                    for (i, f) in found.iter().take(output::WITNESS_LIMIT).enumerate() {
                        write_witness(dir, &format!("{label}-{i:03}"), &f.graph())?;
                    }
                }
            }
            let code = if summary.complete { 0 } else { EXIT_INCOMPLETE };
            (output::search(cli.format, &summary)?, code)
        }
    };
    emit(cli.output.as_deref(), &rendered)?;
    Ok(code)
}

fn cap(cli: &Cli, cap: usize) -> usize {
    if cli.force {
        usize::MAX
    } else {
        cap
    }
}

fn input_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Reads an edge-list file, or a graph6 file when the first meaningful line
/// is not a bare vertex count.
fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let looks_graph6 = first.starts_with(">>graph6<<")
        || first
            .bytes()
            .any(|b| !(b.is_ascii_digit() || b == b' ' || b == b'\t'));
    let g = if looks_graph6 && !first.contains(char::is_whitespace) {
        graph6::decode(first)?
    } else {
        parse_edge_list(&text, false)?
    };
    g.require_connected()?;
    Ok(g)
}

fn family_graph(spec: &str, seed: u64) -> CliResult<Graph> {
    let mut parts = spec.split(':');
    let kind = parts.next().unwrap_or("");
    let nums: Vec<usize> = parts
        .map(|p| {
            p.parse()
                .map_err(|_| Failure::usage(format!("bad family parameter {p:?} in {spec:?}")))
        })
        .collect::<CliResult<_>>()?;
    let g = match (kind, nums.as_slice()) {
        ("path", [n]) => generators::path(*n)?,
        ("cycle", [n]) => generators::cycle(*n)?,
        ("star", [n]) => generators::star(*n)?,
        ("random-tree", [n]) => generators::random_tree(*n, seed)?,
        ("random-unicyclic", [n, girth]) => generators::random_unicyclic(*n, *girth, seed)?,
        ("random-connected", [n, extra]) => generators::random_connected(*n, *extra, seed)?,
        _ => return Err(Failure::usage(format!("unknown family {spec:?}"))),
    };
    Ok(g)
}

/// Accepts `a..b`, `a..=b` or a single order.
fn parse_range(s: &str) -> CliResult<(usize, usize)> {
    let bad = || Failure::usage(format!("bad range {s:?}, expected a..b"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn write_witness(dir: &Path, stem: &str, g: &Graph) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
    let report = full_report(g)?;
    let edges = dir.join(format!("{stem}.edges"));
    fs::write(&edges, fermat_zagreb::to_edge_list(g)).map_err(|e| Failure::io(&edges, e))?;
    let json = dir.join(format!("{stem}.json"));
    let body = output::witness_json(stem, g, &report)?;
    fs::write(&json, body).map_err(|e| Failure::io(&json, e))?;
    Ok(())
}

fn emit(path: Option<&Path>, r: &Rendered) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, r.as_bytes()).map_err(|e| Failure::io(p, e)),
        None => io::stdout()
            .lock()
            .write_all(r.as_bytes())
            .map_err(|e| Failure::internal(format!("stdout: {e}"))),
    }
}

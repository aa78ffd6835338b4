use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use hamcycle::count::{self, CountError, CountOptions};
use hamcycle::formulas;
use hamcycle::generators::{self, LayeredGraph};
use hamcycle::graph::Graph;
use hamcycle::io::{self as hio, SurveyOptions, PLANAR_CODE_HEADER};
use hamcycle::transfer;

#[derive(Parser)]
#[command(name = "hamcycle", version, about = "Hamilton cycles in cubic planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Petersen,
    Rl,
    Nanotube,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member as an edge list.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count Hamilton cycles of a graph file or a generated graph.
    Count {
        file: Option<PathBuf>,
        #[arg(long, value_enum, conflicts_with = "file", requires = "params")]
        family: Option<Family>,
        #[arg(long, value_delimiter = ',', requires = "family")]
        params: Vec<usize>,
        #[arg(long)]
        per_edge: bool,
        /// Bucket by crossing type (nanotubes only).
        #[arg(long)]
        by_type: bool,
        /// Time budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Evaluate a closed-form count.
    Formula {
        #[command(subcommand)]
        which: FormulaCmd,
    },
    /// Typed nanotube count from the transfer system.
    Tm {
        #[arg(long)]
        width: usize,
        #[arg(long)]
        pairs: usize,
        #[arg(long)]
        length: u64,
        #[arg(long)]
        show_system: bool,
        /// Index by all partitions instead of rotation orbits.
        #[arg(long)]
        full: bool,
    },
    /// Growth constants of a typed nanotube count.
    Asym {
        #[arg(long)]
        width: usize,
        #[arg(long)]
        pairs: usize,
    },
    /// Summarise a planar_code corpus by vertex count.
    Survey {
        file: PathBuf,
        #[arg(long)]
        cc: Option<usize>,
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Test cyclic k-edge-connectivity.
    CheckCc {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Write a bundled fixture as an edge list.
    Fixture {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FormulaCmd {
    Petersen { m: usize },
    Rl { m: usize, k: usize },
    Nanotube5 { k: usize },
}

enum Failure {
    Invalid(String),
    Timeout(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Timeout(msg)) => {
            eprintln!("timeout: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Gen { family, params, out } => {
            let g = generate(family, &params)?.0;
            emit(&hio::edge_list_string(&g), out.as_deref())
        }
        Command::Count {
            file,
            family,
            params,
            per_edge,
            by_type,
            budget,
        } => count_cmd(file, family, &params, per_edge, by_type, budget.map(seconds).transpose()?),
        Command::Formula { which } => {
            let value = match which {
                FormulaCmd::Petersen { m } => formulas::schwenk_count(m)?,
                FormulaCmd::Rl { m, k } => formulas::rl_count(m, k)?,
                FormulaCmd::Nanotube5 { k } => formulas::n5_count(k)?,
            };
            println!("{value}");
            Ok(())
        }
        Command::Tm {
            width,
            pairs,
            length,
            show_system,
            full,
        } => {
            let sys = transfer::build_transfer_system(width, pairs, !full)?;
            if show_system {
                print!("{}", sys.render());
            }
            println!("typed_count({width},{pairs},{length}) = {}", sys.count(length));
            Ok(())
        }
        Command::Asym { width, pairs } => {
            let g = transfer::growth_constants(width, pairs)?;
            println!("char_poly = {}", join(&g.char_poly));
            println!("recurrence = {}", join(&g.recurrence));
            println!("period = {}, residue = {}", g.period, g.residue);
            println!("dominant_root = {:.12}", g.dominant_root);
            println!(
                "prefactor = {:.12} (k = {}, drift {:.1e})",
                g.prefactor, g.prefactor_k, g.prefactor_drift
            );
            Ok(())
        }
        Command::Survey { file, cc, budget, csv } => {
            let corpus = read_corpus(&file)?;
            let opts = SurveyOptions {
                cc_filter: cc,
                budget: budget.map(seconds).transpose()?,
            };
            let rows = hio::survey(&corpus, opts);
            print!("{}", hio::survey_table(&rows));
            if let Some(path) = csv {
                fs::write(path, hio::survey_csv(&rows))?;
            }
            Ok(())
        }
        Command::CheckCc { file, k } => {
            for (i, g) in read_corpus(&file)?.iter().enumerate() {
                let verdict = match g.cycle_separating_cut(k)? {
                    None => "yes".to_string(),
                    Some(cut) => {
                        let edges: Vec<String> = cut
                            .iter()
                            .map(|&e| format!("{}-{}", g.edges()[e].0, g.edges()[e].1))
                            .collect();
                        format!("no (cut {})", edges.join(" "))
                    }
                };
                println!("graph {i}: cyclically {k}-edge-connected: {verdict}");
            }
            Ok(())
        }
        Command::Fixture { name, out } => {
            let g = generators::fixture(&name)?;
            emit(&hio::edge_list_string(&g), out.as_deref())
        }
    }
}

/// Coefficients, leading first, separated by spaces.
fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn seconds(s: f64) -> Result<Duration, Failure> {
    Duration::try_from_secs_f64(s).map_err(|_| Failure::Invalid(format!("bad budget {s}")))
}

fn emit(text: &str, out: Option<&Path>) -> CliResult {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn generate(family: Family, params: &[usize]) -> Result<(Graph, Option<LayeredGraph>), Failure> {
    let &[a, b] = params else {
        return Err(Failure::Invalid("--params takes two values a,b".into()));
    };
    Ok(match family {
        Family::Petersen => (generators::generalized_petersen(a, b)?, None),
        Family::Rl => (generators::ring_of_ladders(a, b)?, None),
        Family::Nanotube => {
            let lg = generators::nanotube(a, b)?;
            (lg.graph.clone(), Some(lg))
        }
    })
}

/// planar_code if the file starts with its header, edge list otherwise.
fn read_corpus(path: &Path) -> Result<Vec<Graph>, Failure> {
    let bytes = fs::read(path)?;
    if bytes.starts_with(PLANAR_CODE_HEADER) || bytes.first().is_some_and(|&b| b < b' ' && b != b'\n') {
        Ok(hio::parse_planar_code(&bytes)?)
    } else {
        Ok(vec![hio::read_edge_list(BufReader::new(bytes.as_slice()))?])
    }
}

fn count_failure(e: CountError) -> Failure {
    match e {
        CountError::Timeout(d) => Failure::Timeout(format!("no result within {:.1}s", d.as_secs_f64())),
        other => Failure::Invalid(other.to_string()),
    }
}

fn count_cmd(
    file: Option<PathBuf>,
    family: Option<Family>,
    params: &[usize],
    per_edge: bool,
    by_type: bool,
    budget: Option<Duration>,
) -> CliResult {
    let (graphs, layered) = match (file, family) {
        (Some(path), None) => (read_corpus(&path)?, None),
        (None, Some(f)) => {
            let (g, lg) = generate(f, params)?;
            (vec![g], lg)
        }
        _ => return Err(Failure::Invalid("give a FILE or --family with --params".into())),
    };
    if by_type {
        let lg = layered.ok_or_else(|| Failure::Invalid("--by-type needs --family nanotube".into()))?;
        let buckets = count::count_by_crossing_type_within(&lg, budget).map_err(count_failure)?;
        for (t, n) in buckets {
            println!("type {t}: {n}");
        }
        return Ok(());
    }
    let opts = CountOptions { per_edge, budget };
    let many = graphs.len() > 1;
    for (i, g) in graphs.iter().enumerate() {
        let hc = count::count_with(g, opts).map_err(count_failure)?;
        let mut out = String::new();
        if many {
            let _ = write!(out, "graph {i}: ");
        }
        let _ = writeln!(out, "{}", hc.total);
        if let Some(per) = &hc.per_edge {
            for (&(u, v), c) in g.edges().iter().zip(per) {
                let _ = writeln!(out, "{u} {v} {c}");
            }
        }
        print!("{out}");
    }
    Ok(())
}

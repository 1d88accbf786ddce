//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a counterexample, 2 for
//! usage, parse, I/O and size-cap errors.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{connected_graphs, MAX_ENUMERATION_ORDER};
use crate::graph::{self, Graph};
use crate::graph6::{encode_graph6, parse_graph6};
use crate::invariants::{circumference, is_hamiltonian, toughness, vertex_connectivity};
use crate::surgery::{heuristic_longest_cycle, SurgeryConfig};
use crate::verifier::{batch_verify, parse_theorem_list, VerifyLimits};

/// Environment variable holding the number of `verify` worker threads.
pub const WORKERS_ENV: &str = "TOUGHCYCLE_WORKERS";

pub const EXIT_OK: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "toughcycle", version, about = "Toughness, circumference and cycle-bound checks for small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print n, m, δ, κ, τ, c and the hamiltonian and Petersen flags.
    Compute {
        /// graph6 word, or `-` to read one word per line from stdin
        graph: String,
        /// Refuse graphs with more vertices than this
        #[arg(long, default_value_t = 16)]
        max_n: usize,
    },
    /// Check bound statements over a graph6 corpus.
    Verify(VerifyArgs),
    /// Look for a long cycle with the surgery heuristic.
    Search(SearchArgs),
    /// Print graph6 lines for a graph family.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Records,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// graph6 file, or `-` for stdin
    pub input: String,
    /// Comma-separated selection from A, B, 1, C1, C, L1, L2, L3
    #[arg(long, default_value = "A,B,1,C1,L1,L2,L3")]
    pub theorems: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Largest order for exact invariants; larger graphs get resource-limit
    #[arg(long, default_value_t = 16)]
    pub max_n: usize,
    /// Largest order for the all-pairs path check
    #[arg(long, default_value_t = 10)]
    pub theorem_c_max_n: usize,
    /// Most longest outside paths listed per cycle
    #[arg(long, default_value_t = 10_000)]
    pub path_cap: usize,
    /// Shift the circumference before checking (test hook)
    #[arg(long, hide = true, default_value_t = 0, allow_negative_numbers = true)]
    pub inject_c_offset: isize,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// graph6 word
    pub graph: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also compute the exact circumference and compare
    #[arg(long)]
    pub exact: bool,
    #[arg(long, default_value_t = 8)]
    pub restarts: usize,
    /// Longest intermediate path tried, in edges
    #[arg(long, default_value_t = 3)]
    pub max_len: usize,
    /// Outside paths tried per cycle
    #[arg(long, default_value_t = 8)]
    pub paths: usize,
    /// Largest order for --exact
    #[arg(long, default_value_t = 16)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// complete N | cycle N | bipartite A B | petersen | gnp N P | connected N
    pub family: String,
    pub params: Vec<String>,
    /// Number of gnp samples
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// A failure that ends the command with a message and exit code 2.
#[derive(Debug)]
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

fn describe(g: &Graph) -> String {
    let tau = toughness(g);
    let c = circumference(g).length;
    format!(
        "n={} m={} δ={} κ={} τ={} c={} hamiltonian={} petersen={}",
        g.n(),
        g.edge_count(),
        g.min_degree().unwrap_or(0),
        vertex_connectivity(g),
        tau,
        c,
        is_hamiltonian(g),
        g.is_petersen()
    )
}

fn parse_word(word: &str, max_n: usize) -> Result<Graph, Fail> {
    let g = parse_graph6(word).map_err(|e| Fail(format!("cannot parse {word:?}: {e}")))?;
    if g.n() > max_n {
        return Err(Fail(format!(
            "graph has {} vertices; exact invariants are capped at {max_n} (raise with --max-n)",
            g.n()
        )));
    }
    Ok(g)
}

fn compute(graph: &str, max_n: usize, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<u8, Fail> {
    if graph == "-" {
        for line in stdin.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            writeln!(out, "{}", describe(&parse_word(line.trim_end(), max_n)?))?;
        }
    } else {
        writeln!(out, "{}", describe(&parse_word(graph, max_n)?))?;
    }
    Ok(EXIT_OK)
}

fn workers_from_env() -> Result<Option<usize>, Fail> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&k| k > 0)
            .map(Some)
            .ok_or_else(|| Fail(format!("{WORKERS_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn verify(args: &VerifyArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<u8, Fail> {
    let theorems = parse_theorem_list(&args.theorems)?;
    if theorems.is_empty() {
        return Err(Fail("no theorems selected".into()));
    }
    if args.max_n == 0 || args.path_cap == 0 {
        return Err(Fail("caps must be positive".into()));
    }
    let limits = VerifyLimits {
        max_exact_n: args.max_n,
        theorem_c_max_n: args.theorem_c_max_n,
        path_cap: args.path_cap,
        workers: workers_from_env()?,
        c_offset: args.inject_c_offset,
    };
    let report = if args.input == "-" {
        batch_verify(stdin, "stdin", &theorems, &limits)?
    } else {
        let file = File::open(&args.input).map_err(|e| Fail(format!("{}: {e}", args.input)))?;
        batch_verify(BufReader::new(file), &args.input, &theorems, &limits)?
    };
    match args.format {
        Format::Table => write!(out, "{}", report.table())?,
        Format::Records => write!(out, "{}", report.records())?,
    }
    Ok(if report.has_counterexample() {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    })
}

fn search(args: &SearchArgs, out: &mut dyn Write) -> Result<u8, Fail> {
    let g = parse_word(&args.graph, graph::MAX_VERTICES)?;
    let config = SurgeryConfig {
        max_intermediate_len: args.max_len,
        path_candidates: args.paths,
        restarts: args.restarts,
    };
    let exact = if args.exact {
        if g.n() > args.max_n {
            return Err(Fail(format!(
                "graph has {} vertices; --exact is capped at {} (raise with --max-n)",
                g.n(),
                args.max_n
            )));
        }
        Some(circumference(&g).length)
    } else {
        None
    };
    match heuristic_longest_cycle(&g, args.seed, &config) {
        None => writeln!(out, "acyclic")?,
        Some(cycle) => {
            writeln!(out, "length={}", cycle.len())?;
            writeln!(out, "cycle={}", cycle.canonical())?;
            if let Some(c) = exact {
                let mark = if c == cycle.len() { "MATCH" } else { "GAP" };
                writeln!(out, "exact={c} {mark}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T, Fail> {
    let raw = params
        .get(i)
        .ok_or_else(|| Fail(format!("missing parameter {what}")))?;
    raw.parse()
        .map_err(|_| Fail(format!("bad value {raw:?} for {what}")))
}

fn gen(args: &GenArgs, out: &mut dyn Write) -> Result<u8, Fail> {
    let p = &args.params;
    let graphs: Vec<Graph> = match args.family.as_str() {
        "complete" => vec![graph::complete(param(p, 0, "N")?)?],
        "cycle" => vec![graph::cycle_graph(param(p, 0, "N")?)?],
        "path" => vec![graph::path_graph(param(p, 0, "N")?)?],
        "bipartite" => vec![graph::complete_bipartite(param(p, 0, "A")?, param(p, 1, "B")?)?],
        "petersen" => vec![graph::petersen()],
        "gnp" => {
            let n: usize = param(p, 0, "N")?;
            let prob: f64 = param(p, 1, "P")?;
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            (0..args.count)
                .map(|_| graph::random_gnp_with(n, prob, &mut rng))
                .collect::<Result<_, _>>()?
        }
        "connected" => {
            let n: usize = param(p, 0, "N")?;
            if n > MAX_ENUMERATION_ORDER {
                return Err(Fail(format!("connected graphs are enumerated up to n = {MAX_ENUMERATION_ORDER}")));
            }
            connected_graphs(n)
        }
        other => return Err(Fail(format!("unknown family {other:?}"))),
    };
    for g in &graphs {
        writeln!(out, "{}", encode_graph6(g))?;
    }
    Ok(EXIT_OK)
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute { graph, max_n } => compute(graph, *max_n, stdin, out),
        Command::Verify(args) => verify(args, stdin, out),
        Command::Search(args) => search(args, out),
        Command::Gen(args) => gen(args, out),
    };
    match result {
        Ok(code) => code,
        Err(Fail(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("toughcycle").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_petersen_and_triangle() {
        let (code, out, _) = call(&["compute", "IheA@GUAo"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "n=10 m=15 δ=3 κ=3 τ=4/3 c=9 hamiltonian=false petersen=true\n");
        let (_, out, _) = call(&["compute", "Bw"], "");
        assert_eq!(out, "n=3 m=3 δ=2 κ=2 τ=inf c=3 hamiltonian=true petersen=false\n");
    }

    #[test]
    fn compute_reports_offset() {
        let (code, _, err) = call(&["compute", "B w"], "");
        assert_eq!(code, 2);
        assert!(err.contains("byte 1"), "{err}");
    }

    #[test]
    fn gen_families() {
        assert_eq!(call(&["gen", "cycle", "5"], "").1, "Dhc\n");
        assert_eq!(call(&["gen", "petersen"], "").1, "IheA@GUAo\n");
        assert_eq!(call(&["gen", "wheel", "5"], "").0, 2);
        let (code, out, _) = call(&["gen", "gnp", "9", "0.5", "--count", "100", "--seed", "7"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 100);
        assert_eq!(out, call(&["gen", "gnp", "9", "0.5", "--count", "100", "--seed", "7"], "").1);
    }

    #[test]
    fn search_outputs() {
        let (code, out, _) = call(&["search", "Bw", "--exact"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "length=3\ncycle=0 1 2\nexact=3 MATCH\n");
        let (code, out, _) = call(&["search", "Ch"], "");
        assert_eq!((code, out.as_str()), (0, "acyclic\n"));
    }

    #[test]
    fn verify_exit_codes() {
        let (code, _, _) = call(&["verify", "-", "--theorems", "A,B,1"], "IheA@GUAo\n");
        assert_eq!(code, 0);
        let (code, _, _) = call(&["verify", "-", "--theorems", "1", "--inject-c-offset", "-4"], "E~~w\n");
        assert_eq!(code, 1);
        let (code, _, err) = call(&["verify", "/nonexistent/corpus.g6"], "");
        assert_eq!(code, 2);
        assert!(err.contains("/nonexistent/corpus.g6"));
        assert_eq!(call(&["verify", "-", "--theorems", "Z"], "").0, 2);
    }
}

//! Argument parsing and command dispatch for the `porient` binary.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partial_orient::formulas::check_probability;
use partial_orient::{
    brute_count, canonical_rep, chromatic_count, mc_cutminimal, mc_subgraph,
    parse_rational, reliability_exact, tutte_polynomial_with, verify_identities, BigRational, CensusReport,
    McConfig, Multigraph, OrientationClass, PartialOrientation, ReferencePair, TutteOptions,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Library(#[from] partial_orient::Error),
    #[error("{0}")]
    Check(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "porient", version, about = "Tutte polynomials and partial orientations of multigraphs")]
pub struct Cli {
    #[command(flatten)]
    pub input: GraphInput,

    /// Emit {"graph", "command", "result"} JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Graph file ("-" reads standard input).
    #[arg(long, short = 'g', global = true)]
    pub graph: Option<PathBuf>,

    /// Built-in graph: k3, k4, theta, path:N, star:N, cycle:N, complete:N, theta:N.
    #[arg(long, global = true)]
    pub named: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tutte polynomial by deletion-contraction.
    Tutte {
        /// Evaluate independent branches on the thread pool.
        #[arg(long)]
        parallel: bool,
    },
    /// Weighted count of an orientation class.
    Count {
        #[arg(long)]
        class: OrientationClass,
        #[arg(long, value_enum, default_value = "formula")]
        method: CountMethod,
        #[arg(short, default_value_t = 1)]
        k: u64,
        #[arg(short, default_value_t = 1)]
        l: u64,
        /// Reference pair for the minimal classes.
        #[arg(long, default_value = "default")]
        pair: String,
    },
    /// Canonical representative of an orientation and the moves reaching it.
    Canonical {
        /// One character per edge: '0' unoriented, '+' as stored, '-' reversed.
        #[arg(long, allow_hyphen_values = true)]
        orientation: String,
        #[arg(long)]
        class: OrientationClass,
        /// default, q:VERTEX or random:SEED.
        #[arg(long, default_value = "default")]
        pair: String,
    },
    /// Full identity report by enumeration.
    Census(SuiteArgs),
    /// Identity report summarised as pass/fail; nonzero exit on any failure.
    Verify(SuiteArgs),
    /// Exact or sampled all-terminal reliability.
    Reliability {
        #[arg(long)]
        p: String,
        #[arg(long, value_enum, default_value = "exact")]
        method: ReliabilityMethod,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "default")]
        pair: String,
    },
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// Random reference pairs besides the default one.
    #[arg(long, default_value_t = 3)]
    pub pairs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Formula,
    Brute,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReliabilityMethod {
    Exact,
    McSubgraph,
    McCutmin,
}

/// Rendered result of one invocation.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

pub const SUITE_KL: [(u64, u64); 5] = [(1, 0), (1, 1), (2, 1), (1, 2), (3, 2)];

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    Ok(text.parse()?)
}

pub fn named_graph(spec: &str) -> Result<Multigraph> {
    let bad = || CliError::Input(format!("unknown graph {spec:?}"));
    let (kind, size) = match spec.split_once(':') {
        Some((kind, size)) => (kind, Some(size.parse::<usize>().map_err(|_| bad())?)),
        None => (spec, None),
    };
    let g = match (kind.to_ascii_lowercase().as_str(), size) {
        ("k3", None) => Multigraph::cycle(3)?,
        ("k4", None) => Multigraph::complete(4)?,
        ("theta", None) => Multigraph::theta(3),
        ("theta", Some(k)) => Multigraph::theta(k),
        ("path", Some(m)) => Multigraph::path(m),
        ("star", Some(m)) => Multigraph::star(m),
        ("cycle", Some(n)) => Multigraph::cycle(n)?,
        ("complete", Some(n)) => Multigraph::complete(n)?,
        _ => return Err(bad()),
    };
    Ok(g)
}

fn load_graph(input: &GraphInput) -> Result<Multigraph> {
    if let Some(spec) = &input.named {
        return named_graph(spec);
    }
    let path = input.graph.as_ref().expect("clap requires one input");
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))?
    };
    parse_graph(&text)
}

pub fn parse_pair(g: &Multigraph, spec: &str) -> Result<ReferencePair> {
    let bad = || CliError::Input(format!("bad pair {spec:?}; expected default, q:VERTEX or random:SEED"));
    match spec.split_once(':') {
        None if spec == "default" => Ok(ReferencePair::default_for(g)),
        Some(("q", v)) => Ok(ReferencePair::q_connected(g, v.parse().map_err(|_| bad())?)?),
        Some(("random", s)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s.parse().map_err(|_| bad())?);
            Ok(ReferencePair::random(g, &mut rng))
        }
        _ => Err(bad()),
    }
}

fn graph_json(g: &Multigraph) -> Value {
    json!({ "n": g.n(), "m": g.m(), "edges": g.edges() })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Tutte { .. } => "tutte",
        Command::Count { .. } => "count",
        Command::Canonical { .. } => "canonical",
        Command::Census(_) => "census",
        Command::Verify(_) => "verify",
        Command::Reliability { .. } => "reliability",
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let g = load_graph(&cli.input)?;
    let (text, result, ok) = match &cli.command {
        Command::Tutte { parallel } => {
            let opts = if *parallel { TutteOptions::parallel() } else { TutteOptions::default() };
            let t = tutte_polynomial_with(&g, opts)?;
            (format!("{t}\n"), serde_json::to_value(&t).expect("json"), true)
        }
        Command::Count { class, method, k, l, pair } => {
            let pair = parse_pair(&g, pair)?;
            count(&g, *class, *method, *k, *l, &pair)?
        }
        Command::Canonical { orientation, class, pair } => {
            let o: PartialOrientation = orientation.parse()?;
            let minimal = class
                .minimal_class()
                .ok_or_else(|| CliError::Input(format!("{class} is not a minimal class")))?;
            let pair = parse_pair(&g, pair)?;
            let (rep, trace) = canonical_rep(&g, &o, &pair, minimal)?;
            let moves: Vec<String> = trace.moves.iter().map(|m| m.describe()).collect();
            let mut text = format!("{rep}\n");
            for m in &moves {
                let _ = writeln!(text, "  {m}");
            }
            (text, json!({ "orientation": rep.to_string(), "moves": moves }), true)
        }
        Command::Census(args) => {
            let report = suite_report(&g, args)?;
            let ok = report.all_passed;
            (census_text(&report), serde_json::to_value(&report).expect("json"), ok)
        }
        Command::Verify(args) => {
            let report = suite_report(&g, args)?;
            let failures: Vec<&str> = report.failures().map(|r| r.identity.as_str()).collect();
            let text = if report.all_passed {
                format!("PASS {} checks\n", report.records.len())
            } else {
                format!("FAIL {} of {} checks: {}\n", failures.len(), report.records.len(), failures.join(", "))
            };
            let result = json!({
                "passed": report.all_passed,
                "checks": report.records.len(),
                "failures": failures,
            });
            (text, result, report.all_passed)
        }
        Command::Reliability { p, method, trials, seed, pair } => {
            let p = parse_rational(p)?;
            reliability(&g, p, *method, *trials, *seed, pair)?
        }
    };
    let json = json!({ "graph": graph_json(&g), "command": command_name(&cli.command), "result": result });
    Ok(Output { text, json, ok })
}

fn count(
    g: &Multigraph,
    class: OrientationClass,
    method: CountMethod,
    k: u64,
    l: u64,
    pair: &ReferencePair,
) -> Result<(String, Value, bool)> {
    let formula = match method {
        CountMethod::Brute => None,
        _ => Some(chromatic_count(g, class, k, l)?),
    };
    let brute = match method {
        CountMethod::Formula => None,
        _ => Some(brute_count(g, class, pair, k, l)?),
    };
    let ok = match (&formula, &brute) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    let shown: Vec<String> = [&formula, &brute].into_iter().flatten().map(ToString::to_string).collect();
    let result = json!({
        "class": class.name(),
        "k": k.to_string(),
        "l": l.to_string(),
        "formula": formula.map(|v| v.to_string()),
        "brute": brute.map(|v| v.to_string()),
        "equal": ok,
    });
    Ok((format!("{}\n", shown.join(" ")), result, ok))
}

fn suite_report(g: &Multigraph, args: &SuiteArgs) -> Result<CensusReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut pairs = vec![ReferencePair::default_for(g)];
    pairs.extend((0..args.pairs).map(|_| ReferencePair::random(g, &mut rng)));
    Ok(verify_identities(g, &pairs, &SUITE_KL)?)
}

fn census_text(report: &CensusReport) -> String {
    let mut out = format!("graph {}\n", report.graph);
    for r in &report.records {
        let kl = match (r.k, r.l) {
            (Some(k), Some(l)) => format!(" (k,l)=({k},{l})"),
            _ => String::new(),
        };
        let pair = r.pair.map(|p| format!(" pair {p}")).unwrap_or_default();
        let mark = if r.equal { "ok  " } else { "FAIL" };
        let _ = writeln!(out, "{mark} {}{kl}{pair}: {} vs {}", r.identity, r.formula, r.brute);
    }
    let _ = writeln!(out, "{}", if report.all_passed { "all identities hold" } else { "identity failures" });
    out
}

fn reliability(
    g: &Multigraph,
    p: BigRational,
    method: ReliabilityMethod,
    trials: u64,
    seed: u64,
    pair: &str,
) -> Result<(String, Value, bool)> {
    let exact = reliability_exact(g, &p)?;
    let cfg = McConfig { trials, seed, p: p.clone() };
    let estimate = match method {
        ReliabilityMethod::Exact => {
            let result = json!({ "method": "exact", "p": p.to_string(), "value": exact.to_string() });
            return Ok((format!("{exact}\n"), result, true));
        }
        ReliabilityMethod::McSubgraph => mc_subgraph(g, &cfg)?,
        ReliabilityMethod::McCutmin => {
            let half = BigRational::new(1.into(), 2.into());
            check_probability(&p, &half, true)?;
            mc_cutminimal(g, &cfg, &parse_pair(g, pair)?)?
        }
    };
    let text = format!(
        "{:.6} +/- {:.6} ({} of {} trials, seed {}; exact {exact})\n",
        estimate.estimate, estimate.std_error, estimate.successes, estimate.trials, estimate.seed
    );
    let mut result = serde_json::to_value(&estimate).expect("json");
    result["method"] = json!(if method == ReliabilityMethod::McSubgraph { "mc-subgraph" } else { "mc-cutmin" });
    result["p"] = json!(p.to_string());
    result["exact"] = json!(exact.to_string());
    Ok((text, result, true))
}

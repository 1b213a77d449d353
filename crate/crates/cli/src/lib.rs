//! Command-line front end: argument parsing, command dispatch and the output
//! data models. Every JSON document printed by the binary deserializes back
//! into one of the `*Output` types here.

use std::fmt::Write;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schubert::labeled_path::{find_random_simple_path, find_simple_path};
use schubert::verify::{self, BoundReport, OracleReport, StanleyReport};
use schubert::{
    enumerate_rp, ladder_graph, schubert_divdiff, schubert_from_pipedreams, Cell, CellSet, Monomial,
    PatternTriple, Permutation, PipeDream, Polynomial,
};
use serde::{Deserialize, Serialize};

/// Largest `n` the verify command sweeps without `--force`.
pub const MAX_UNFORCED_N: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "schubert", version, about = "Schubert polynomials, pipe dreams and the 132-bound")]
pub struct Cli {
    /// Output format; `dot` is only accepted by `graph`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Seed for randomised simple-path search.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Allow `verify` beyond n = 8.
    #[arg(long, global = true)]
    pub force: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length, code, Rothe diagram, rank table and 132-patterns.
    Info { perm: String },
    /// The Schubert polynomial.
    Schubert {
        perm: String,
        #[arg(long, value_enum, default_value_t = Method::Pipedreams)]
        method: Method,
    },
    /// Reduced pipe dreams in sorted order.
    Pipedreams {
        perm: String,
        #[command(flatten)]
        mode: PipedreamMode,
    },
    /// A simple-ladder path from the bottom to the top pipe dream.
    Path { perm: String },
    /// Exhaustive checks over S_n; exits nonzero on any violation.
    Verify {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
        /// Print one table row per permutation.
        #[arg(long)]
        records: bool,
    },
    /// The ladder-move graph on the reduced pipe dreams.
    Graph { perm: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Pipedreams,
    Divdiff,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Bound,
    Stanley,
    Oracles,
    All,
}

#[derive(Debug, Clone, Copy, Args)]
#[group(multiple = false)]
pub struct PipedreamMode {
    /// Print only the number of pipe dreams.
    #[arg(long)]
    pub count: bool,
    /// Draw each pipe dream.
    #[arg(long)]
    pub ascii: bool,
    /// Same as `--format json`.
    #[arg(long)]
    pub json: bool,
}

/// What the binary prints, and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoOutput {
    pub word: Permutation,
    pub n: usize,
    pub length: usize,
    pub code: Vec<usize>,
    pub diagram: CellSet,
    pub rank_table: Vec<Vec<usize>>,
    pub eta: usize,
    pub patterns: Vec<PatternTriple>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertOutput {
    pub word: Permutation,
    pub method: Method,
    pub text: String,
    pub polynomial: Polynomial,
    pub nu: i64,
    /// Present with `--method both`.
    pub equal: Option<bool>,
    /// The divided-difference result when it differs from `polynomial`.
    pub divdiff: Option<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipedreamsOutput {
    pub word: Permutation,
    pub count: usize,
    pub pipe_dreams: Vec<PipeDream>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelRank {
    pub label: Cell,
    pub moves: usize,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathOutput {
    pub eta: usize,
    pub claim_holds: bool,
    pub labels: Vec<LabelRank>,
    pub report: schubert::PathReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub n: usize,
    pub passed: bool,
    pub bound: Option<BoundReport>,
    pub stanley: Option<StanleyReport>,
    pub oracles: Option<OracleReport>,
}

pub fn parse_perm(s: &str) -> Result<Permutation> {
    s.parse::<Permutation>().with_context(|| format!("invalid permutation {s:?}"))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    if format == Some(OutputFormat::Dot) && !matches!(cli.command, Command::Graph { .. }) {
        bail!("--format dot is only valid for the graph command");
    }
    let as_json = format == Some(OutputFormat::Json);
    match &cli.command {
        Command::Info { perm } => info(&parse_perm(perm)?, as_json),
        Command::Schubert { perm, method } => schubert(&parse_perm(perm)?, *method, as_json),
        Command::Pipedreams { perm, mode } => pipedreams(&parse_perm(perm)?, *mode, as_json),
        Command::Path { perm } => path(&parse_perm(perm)?, cli.seed, as_json),
        Command::Verify { n, check, records } => verify_cmd(*n, *check, *records, cli.force, as_json),
        Command::Graph { perm } => graph(&parse_perm(perm)?, format.unwrap_or(OutputFormat::Dot)),
    }
}

fn info(w: &Permutation, as_json: bool) -> Result<Outcome> {
    let out = InfoOutput {
        word: w.clone(),
        n: w.size(),
        length: w.length(),
        code: w.m_vector(),
        diagram: w.rothe_diagram(),
        rank_table: w.rank_table(),
        eta: w.eta(),
        patterns: w.pattern_occurrences_132().into_iter().collect(),
    };
    if as_json {
        return Ok(Outcome::ok(json(&out)));
    }
    let mut s = String::new();
    writeln!(s, "permutation: {w}")?;
    writeln!(s, "n: {}", out.n)?;
    writeln!(s, "length: {}", out.length)?;
    writeln!(s, "code: {}", join(&out.code, " "))?;
    writeln!(s, "eta: {}", out.eta)?;
    writeln!(s, "diagram ({} boxes; # box, o point (i, w(i))):", out.diagram.len())?;
    for i in 1..=out.n {
        let row: String = (1..=out.n)
            .map(|j| {
                if w.at(i) == j {
                    'o'
                } else if out.diagram.contains(i, j) {
                    '#'
                } else {
                    '.'
                }
            })
            .collect();
        writeln!(s, "  {row}")?;
    }
    let cells: Vec<String> = out.diagram.iter().map(|c| c.to_string()).collect();
    writeln!(s, "diagram cells: {}", if cells.is_empty() { "none".into() } else { cells.join(" ") })?;
    writeln!(s, "rank table r(i,j):")?;
    let width = out.n.to_string().len();
    for row in &out.rank_table {
        let cells: Vec<String> = row.iter().map(|r| format!("{r:>width$}")).collect();
        writeln!(s, "  {}", cells.join(" "))?;
    }
    let pats: Vec<String> = out.patterns.iter().map(|t| t.to_string()).collect();
    writeln!(s, "132-patterns ({}): {}", pats.len(), if pats.is_empty() { "none".into() } else { pats.join(" ") })?;
    Ok(Outcome::ok(s))
}

fn schubert(w: &Permutation, method: Method, as_json: bool) -> Result<Outcome> {
    let (polynomial, equal, divdiff) = match method {
        Method::Pipedreams => (schubert_from_pipedreams(w), None, None),
        Method::Divdiff => (schubert_divdiff(w), None, None),
        Method::Both => {
            let pd = schubert_from_pipedreams(w);
            let dd = schubert_divdiff(w);
            let eq = pd == dd;
            (pd, Some(eq), (!eq).then_some(dd))
        }
    };
    let code = if equal == Some(false) { 1 } else { 0 };
    let out = SchubertOutput {
        word: w.clone(),
        method,
        text: polynomial.to_text(),
        nu: polynomial.evaluate_all_ones(),
        polynomial,
        equal,
        divdiff,
    };
    if as_json {
        return Ok(Outcome { stdout: json(&out), code });
    }
    let mut s = format!("{}\n", out.text);
    if let Some(eq) = out.equal {
        let terms = out.polynomial.num_terms();
        if eq {
            writeln!(s, "equal: true ({terms} terms)")?;
        } else {
            writeln!(s, "equal: false")?;
            writeln!(s, "divdiff: {}", out.divdiff.as_ref().map(|p| p.to_text()).unwrap_or_default())?;
        }
    }
    Ok(Outcome { stdout: s, code })
}

fn pipedreams(w: &Permutation, mode: PipedreamMode, as_json: bool) -> Result<Outcome> {
    let dreams = enumerate_rp(w);
    if mode.json || as_json {
        let out = PipedreamsOutput { word: w.clone(), count: dreams.len(), pipe_dreams: dreams };
        return Ok(Outcome::ok(json(&out)));
    }
    if mode.count {
        return Ok(Outcome::ok(format!("{}\n", dreams.len())));
    }
    let mut s = String::new();
    for (k, p) in dreams.iter().enumerate() {
        let weight = Monomial::new(p.weight());
        if mode.ascii {
            writeln!(s, "# {} {weight}", k + 1)?;
            for line in p.to_ascii().lines() {
                writeln!(s, "{line}")?;
            }
            writeln!(s)?;
        } else {
            writeln!(s, "{p}  {weight}")?;
        }
    }
    Ok(Outcome::ok(s))
}

fn path(w: &Permutation, seed: Option<u64>, as_json: bool) -> Result<Outcome> {
    let report = match seed {
        Some(seed) => find_random_simple_path(w, &mut ChaCha8Rng::seed_from_u64(seed)),
        None => find_simple_path(w),
    }?;
    let labels: Vec<LabelRank> = report
        .move_counts
        .iter()
        .map(|(&label, &moves)| LabelRank { label, moves, rank: w.rank(label.row, label.col).expect("diagram cell") })
        .collect();
    let eta = w.eta();
    let claim_holds = labels.iter().all(|l| l.moves == l.rank);
    let code = if claim_holds && report.total == eta { 0 } else { 1 };
    let out = PathOutput { eta, claim_holds, labels, report };
    if as_json {
        return Ok(Outcome { stdout: json(&out), code });
    }
    let mut s = String::new();
    let r = &out.report;
    writeln!(s, "simple ladder path for {w}: {} steps", r.total)?;
    writeln!(s, "start {}", r.start.dream())?;
    for (k, step) in r.steps.iter().enumerate() {
        writeln!(
            s,
            "step {}: move {} carries label {} from {} to {}",
            k + 1,
            step.mv,
            step.label,
            step.mv.source(),
            step.mv.target()
        )?;
    }
    writeln!(s, "end {}", r.end().dream())?;
    writeln!(s, "label  moves  rank")?;
    for l in &out.labels {
        writeln!(s, "{:<6} {:>5}  {:>4}", l.label.to_string(), l.moves, l.rank)?;
    }
    writeln!(s, "N = {}, eta = {}", r.total, out.eta)?;
    Ok(Outcome { stdout: s, code })
}

fn verify_cmd(n: usize, check: Check, records: bool, force: bool, as_json: bool) -> Result<Outcome> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    if n > MAX_UNFORCED_N && !force {
        bail!("refusing to sweep S_{n} ({n}! permutations) without --force");
    }
    let wants = |c: Check| check == c || check == Check::All;
    let sweep = (wants(Check::Bound) || wants(Check::Stanley)).then(|| verify::sweep(n));
    let bound = wants(Check::Bound).then(|| BoundReport::from_records(n, sweep.clone().unwrap()));
    let stanley = wants(Check::Stanley).then(|| StanleyReport::from_records(n, sweep.clone().unwrap()));
    let oracles = wants(Check::Oracles).then(|| verify::verify_oracles(n));
    let passed = bound.as_ref().is_none_or(BoundReport::passed)
        && stanley.as_ref().is_none_or(StanleyReport::passed)
        && oracles.as_ref().is_none_or(OracleReport::passed);
    let code = if passed { 0 } else { 1 };
    let out = VerifyOutput { n, passed, bound, stanley, oracles };
    if as_json {
        return Ok(Outcome { stdout: json(&out), code });
    }
    let mut s = String::new();
    if records {
        if let Some(recs) = &sweep {
            writeln!(s, "{:<width$}  {:>4}  {:>6}  {:>5}  {:>4}", "word", "eta", "nu", "slack", "path", width = n.max(4))?;
            for r in recs {
                let path = r.path_length.map_or("-".to_string(), |p| p.to_string());
                writeln!(
                    s,
                    "{:<width$}  {:>4}  {:>6}  {:>5}  {:>4}",
                    r.word.to_string(),
                    r.eta,
                    r.nu,
                    r.slack,
                    path,
                    width = n.max(4)
                )?;
            }
        }
    }
    if let Some(b) = &out.bound {
        let dist: Vec<String> = b.slack_distribution.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        writeln!(
            s,
            "bound: S_{n}, {} checked, {} violations, {} path mismatches; slack distribution {{{}}}",
            b.summary.count,
            b.summary.violations,
            b.path_mismatches,
            dist.join(", ")
        )?;
        for v in &b.violations {
            writeln!(s, "  violation: {} eta={} nu={}", v.word, v.eta, v.nu)?;
        }
    }
    if let Some(st) = &out.stanley {
        writeln!(
            s,
            "stanley: S_{n}, {} checked, {} counterexamples; nu=2: {}, eta=1: {}, nu=1: {}, eta=0: {}",
            st.summary.count, st.summary.violations, st.nu_two, st.eta_one, st.nu_one, st.eta_zero
        )?;
        for c in &st.counterexamples {
            writeln!(s, "  counterexample: {} eta={} nu={} ({:?})", c.word, c.eta, c.nu, c.failure)?;
        }
    }
    if let Some(o) = &out.oracles {
        writeln!(s, "oracles: S_{n}, {} checked, {} mismatches", o.summary.count, o.summary.violations)?;
        for m in &o.mismatches {
            writeln!(s, "  mismatch: {}: {} vs {}", m.word, m.pipedreams, m.divdiff)?;
        }
    }
    writeln!(s, "{}", if passed { "PASS" } else { "FAIL" })?;
    Ok(Outcome { stdout: s, code })
}

fn graph(w: &Permutation, format: OutputFormat) -> Result<Outcome> {
    let g = ladder_graph(w);
    let stdout = match format {
        OutputFormat::Dot => g.to_dot(),
        OutputFormat::Json => json(&g),
        OutputFormat::Text => {
            let mut s = format!("ladder graph of {w}: {} nodes, {} edges\n", g.nodes.len(), g.edges.len());
            for (i, p) in g.nodes.iter().enumerate() {
                writeln!(s, "n{i} {p}  {}", Monomial::new(p.weight()))?;
            }
            for e in &g.edges {
                let kind = if e.mv.is_simple() { "simple" } else { "ladder" };
                writeln!(s, "n{} -> n{} {} {kind}", e.source, e.target, e.mv)?;
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

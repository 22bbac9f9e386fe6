//! Command-line front end. [`run`] does all the work and returns what to
//! print plus the exit code, so the binary stays a thin wrapper and tests
//! can drive the tool in-process.
//!
//! Exit codes: 0 on success, 1 on usage or parse errors, 2 on domain
//! errors. Every failure writes one line `error: <kind>: <message>` to the
//! error stream.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bruhat::{decide_hom, factorize, hasse, ElementaryStep, Reason};
use crate::error::{Error, Result};
use crate::obstruction::{degenerate, find_witness, Witness};
use crate::sweep::{run_sweep, Checks, SweepConfig, SweepReport};
use crate::translation::{
    degeneration_trace, Condition, Direction, Stage, Step, TranslationTrace, WeightPair,
};
use crate::weights::{parse_integer, BlockWeight, Composition};
use crate::weyl::{enumerate_orbit, DEFAULT_ORBIT_CAP};

#[derive(Debug, Parser)]
#[command(
    name = "gvm",
    version,
    about = "Homomorphisms between scalar generalized Verma modules of gl(n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest orbit any subcommand may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_ORBIT_CAP)]
    orbit_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a homomorphism from the source module into the target module exists.
    Decide(PairArgs),
    /// Chain of elementary moves from target down to source.
    Factorize(PairArgs),
    /// Threshold witness and degenerate pair for a non-comparable pair.
    Witness(PairArgs),
    /// Step-by-step degeneration of a non-comparable pair.
    Trace(PairArgs),
    /// Every weight in the orbit of a weight, sorted.
    Orbit(WeightArgs),
    /// Cover relations of the orbit as a DOT digraph.
    Hasse(WeightArgs),
    /// Exhaustive consistency checks over small compositions.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Block sizes, e.g. 4,1,2,1,2,4
    #[arg(long)]
    composition: String,
    /// Source weight, e.g. "-2,-4,2,3,-1,4"
    #[arg(long, allow_hyphen_values = true)]
    source: String,
    /// Target weight
    #[arg(long, allow_hyphen_values = true)]
    target: String,
}

#[derive(Debug, Args)]
struct WeightArgs {
    #[arg(long)]
    composition: String,
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Largest n; every composition with at least two parts is visited.
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    /// Entries allowed in the antidominant representatives.
    #[arg(long, allow_hyphen_values = true, default_value = "0,1,2,3")]
    values: String,
    /// Skip the translation trace of non-comparable pairs.
    #[arg(long)]
    no_trace: bool,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn fail(code: i32, kind: &str, message: &str) -> Self {
        let message = message.lines().next().unwrap_or("").trim();
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {kind}: {message}\n"),
            code,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 1,
        _ => 2,
    }
}

/// Parses `args` (program name first) and executes the request.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome::ok(e.render().to_string())
                }
                _ => {
                    // clap spreads one complaint over several lines; keep
                    // everything before the usage block on one line
                    let text = e.to_string();
                    let line: Vec<&str> = text
                        .lines()
                        .map(str::trim)
                        .take_while(|l| {
                            !l.starts_with("Usage:") && !l.starts_with("For more information")
                        })
                        .filter(|l| !l.is_empty())
                        .collect();
                    Outcome::fail(1, "usage", line.join(" ").trim_start_matches("error: "))
                }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => Outcome::ok(out),
        Err(Failure::Usage(msg)) => Outcome::fail(1, "usage", &msg),
        Err(Failure::Domain(e)) => Outcome::fail(exit_code(&e), e.kind(), &e.to_string()),
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn pick_format(
    requested: Option<Format>,
    allowed: &[Format],
    command: &str,
) -> std::result::Result<Format, Failure> {
    match requested {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(Failure::Usage(
            format!("{command} does not support --format {f:?}").to_lowercase(),
        )),
    }
}

fn parse_pair(a: &PairArgs) -> Result<(BlockWeight, BlockWeight)> {
    let comp: Composition = a.composition.parse()?;
    Ok((
        BlockWeight::parse(&comp, &a.source)?,
        BlockWeight::parse(&comp, &a.target)?,
    ))
}

fn parse_weight(a: &WeightArgs) -> Result<BlockWeight> {
    let comp: Composition = a.composition.parse()?;
    BlockWeight::parse(&comp, &a.weight)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> std::result::Result<String, Failure> {
    use Format::{Dot, Json, Text};
    let cap = cli.orbit_cap;
    match &cli.command {
        Command::Decide(a) => {
            let format = pick_format(cli.format, &[Json, Text], "decide")?;
            let (src, tgt) = parse_pair(a)?;
            let out = DecideOutput::new(&src, &tgt)?;
            Ok(match format {
                Json => to_json(&out),
                _ => out.render_text(),
            })
        }
        Command::Factorize(a) => {
            let format = pick_format(cli.format, &[Json, Text], "factorize")?;
            let (src, tgt) = parse_pair(a)?;
            let chain = factorize(&src, &tgt)?;
            let out = FactorizeOutput {
                composition: src.composition().parts().to_vec(),
                source: src.entries().to_vec(),
                target: tgt.entries().to_vec(),
                chain: chain.iter().map(ChainStep::from).collect(),
            };
            Ok(match format {
                Json => to_json(&out),
                _ => {
                    let mut s = format!("{}\n", tgt);
                    for st in &out.chain {
                        let _ = writeln!(s, "  ({},{}) -> {}", st.p, st.q, fmt_entries(&st.after));
                    }
                    s
                }
            })
        }
        Command::Witness(a) => {
            pick_format(cli.format, &[Json], "witness")?;
            let (src, tgt) = parse_pair(a)?;
            let witness = find_witness(&src, &tgt)?;
            let pair = degenerate(&tgt, &src, &witness)?;
            Ok(to_json(&WitnessOutput {
                composition: src.composition().parts().to_vec(),
                source: src.entries().to_vec(),
                target: tgt.entries().to_vec(),
                witness,
                mu_bar: pair.mu_bar.entries().to_vec(),
                nu_bar: pair.nu_bar.entries().to_vec(),
            }))
        }
        Command::Trace(a) => {
            let format = pick_format(cli.format, &[Json, Text], "trace")?;
            let (src, tgt) = parse_pair(a)?;
            let witness = find_witness(&src, &tgt)?;
            let trace = degeneration_trace(&tgt, &src, &witness)?;
            Ok(match format {
                Json => to_json(&TraceOutput::from(&trace)),
                _ => trace.render_text(),
            })
        }
        Command::Orbit(a) => {
            let format = pick_format(cli.format, &[Json, Text], "orbit")?;
            let w = parse_weight(a)?;
            let orbit = enumerate_orbit(&w, cap)?;
            Ok(match format {
                Json => {
                    let lists: Vec<Vec<i64>> = orbit.iter().map(|x| x.entries().to_vec()).collect();
                    to_json(&lists)
                }
                _ => orbit.iter().map(|x| format!("{x}\n")).collect(),
            })
        }
        Command::Hasse(a) => {
            let format = pick_format(cli.format, &[Dot, Json], "hasse")?;
            let w = parse_weight(a)?;
            let h = hasse(&w, cap)?;
            Ok(match format {
                Dot => h.to_dot(),
                _ => to_json(&HasseOutput {
                    composition: h.composition.parts().to_vec(),
                    nodes: h.nodes.iter().map(|x| x.entries().to_vec()).collect(),
                    covers: h.covers.iter().map(|&(u, l)| [u, l]).collect(),
                }),
            })
        }
        Command::Sweep(a) => {
            let format = pick_format(cli.format, &[Json, Text], "sweep")?;
            let values = a
                .values
                .split(',')
                .map(parse_integer)
                .collect::<Result<Vec<_>>>()?;
            if values.is_empty() {
                return Err(Failure::Usage("--values needs at least one entry".into()));
            }
            let config = SweepConfig {
                max_n: a.max_n,
                values,
                cap,
                checks: Checks {
                    trace: !a.no_trace,
                    ..Checks::default()
                },
            };
            let (report, _) = run_sweep(&config)?;
            Ok(match format {
                Json => to_json(&report),
                _ => render_sweep(&report),
            })
        }
    }
}

fn fmt_entries(e: &[i64]) -> String {
    let body: Vec<String> = e.iter().map(i64::to_string).collect();
    format!("[{}]", body.join(","))
}

fn render_sweep(r: &SweepReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "compositions  {}", r.compositions);
    let _ = writeln!(
        s,
        "orbits        {} (largest {})",
        r.orbits, r.largest_orbit
    );
    let _ = writeln!(
        s,
        "pairs         {} ({} comparable, {} not)",
        r.pairs, r.comparable, r.non_comparable
    );
    let _ = writeln!(s, "chain steps   {}", r.chain_steps);
    let _ = writeln!(s, "trace stages  {}", r.trace_stages);
    let _ = writeln!(s, "failures      {}", r.failures());
    for c in &r.counterexamples {
        let _ = writeln!(
            s,
            "  {:?} {:?} source {} target {}: {}",
            c.check,
            c.composition,
            fmt_entries(&c.source),
            fmt_entries(&c.target),
            c.detail
        );
    }
    s
}

/// A chain step as `(p, q)` with the weights on either side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub p: usize,
    pub q: usize,
    pub before: Vec<i64>,
    pub after: Vec<i64>,
}

impl From<&ElementaryStep> for ChainStep {
    fn from(s: &ElementaryStep) -> Self {
        ChainStep {
            p: s.p,
            q: s.q,
            before: s.before.entries().to_vec(),
            after: s.after.entries().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecideOutput {
    pub composition: Vec<usize>,
    pub source: Vec<i64>,
    pub target: Vec<i64>,
    pub exists: bool,
    pub reason: Reason,
    /// `[p, q]` pairs from target down to source.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl DecideOutput {
    pub fn new(src: &BlockWeight, tgt: &BlockWeight) -> Result<Self> {
        let d = decide_hom(src, tgt)?;
        Ok(DecideOutput {
            composition: src.composition().parts().to_vec(),
            source: src.entries().to_vec(),
            target: tgt.entries().to_vec(),
            exists: d.exists,
            reason: d.reason,
            chain: d.chain.map(|c| c.iter().map(|s| [s.p, s.q]).collect()),
            witness: d.witness,
        })
    }

    fn render_text(&self) -> String {
        let mut s = format!("exists  {}\nreason  {:?}\n", self.exists, self.reason);
        if let Some(chain) = &self.chain {
            let steps: Vec<String> = chain.iter().map(|[p, q]| format!("({p},{q})")).collect();
            let _ = writeln!(s, "chain   {}", steps.join(" "));
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness c = {}, s = {}", w.c, w.s);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizeOutput {
    pub composition: Vec<usize>,
    pub source: Vec<i64>,
    pub target: Vec<i64>,
    pub chain: Vec<ChainStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOutput {
    pub composition: Vec<usize>,
    pub source: Vec<i64>,
    pub target: Vec<i64>,
    pub witness: Witness,
    pub mu_bar: Vec<i64>,
    pub nu_bar: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseOutput {
    pub composition: Vec<usize>,
    pub nodes: Vec<Vec<i64>>,
    /// `[upper, lower]` node indices.
    pub covers: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOutput {
    pub target: Vec<i64>,
    pub source: Vec<i64>,
}

impl From<&WeightPair> for PairOutput {
    fn from(p: &WeightPair) -> Self {
        PairOutput {
            target: p.target.entries().to_vec(),
            source: p.source.entries().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftOutput {
    pub direction: Direction,
    pub target_blocks: Vec<usize>,
    pub source_blocks: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegalityOutput {
    pub condition: Condition,
    pub level: i64,
    pub target_ok: bool,
    pub source_ok: bool,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageOutput {
    pub step: Step,
    pub d: i64,
    pub before: PairOutput,
    pub shift: ShiftOutput,
    pub legality: LegalityOutput,
    pub after: PairOutput,
}

impl From<&Stage> for StageOutput {
    fn from(s: &Stage) -> Self {
        StageOutput {
            step: s.step,
            d: s.d,
            before: (&s.before).into(),
            shift: ShiftOutput {
                direction: s.shift.direction,
                target_blocks: s.shift.target_blocks.clone(),
                source_blocks: s.shift.source_blocks.clone(),
            },
            legality: LegalityOutput {
                condition: s.legality.condition,
                level: s.legality.level,
                target_ok: s.legality.target_ok,
                source_ok: s.legality.source_ok,
                verdict: s.legality.verdict(),
            },
            after: (&s.after).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceOutput {
    pub composition: Vec<usize>,
    pub target: Vec<i64>,
    pub source: Vec<i64>,
    pub witness: Witness,
    /// 1-based block images of the element carrying target to source.
    pub relating: Vec<usize>,
    pub b: i64,
    pub stages: Vec<StageOutput>,
    #[serde(rename = "final")]
    pub end: PairOutput,
}

impl From<&TranslationTrace> for TraceOutput {
    fn from(t: &TranslationTrace) -> Self {
        TraceOutput {
            composition: t.start.target.composition().parts().to_vec(),
            target: t.start.target.entries().to_vec(),
            source: t.start.source.entries().to_vec(),
            witness: t.witness,
            relating: t.relating.images(),
            b: t.b,
            stages: t.stages.iter().map(StageOutput::from).collect(),
            end: (&t.end).into(),
        }
    }
}

//! The `propone` command line.
//!
//! Exit codes: 0 on success, 1 when a `check --require` property or a `verify`
//! suite fails, 2 on usage, parse, size or contract errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algorithms::{self, round_robin, Algorithm, RunTrace, Stop};
use crate::error::{Error, Result};
use crate::fairness::{self, FairnessReport};
use crate::instance::{
    fixture, generate, parse_allocation, parse_instance, serialize_instance, validate_allocation,
    Allocation, GenSpec, Instance,
};
use crate::oracle::{verify_all, verify_claim, ClaimId, TheoremSuiteResult};
use crate::valuation::ValuationClass;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNMET: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "propone",
    version,
    about = "PROP1 allocations for submodular and subadditive goods"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an allocation algorithm and report on its output.
    Run(RunArgs),
    /// Check fairness properties of a given allocation.
    Check(CheckArgs),
    /// Write a seeded random instance.
    #[command(alias = "generate")]
    Gen(GenArgs),
    /// Run claim suites and print the traceability table.
    Verify(VerifyArgs),
    /// Compare loop and move counts of the two PROP1 algorithms as CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// A named fixture.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Path to an instance JSON document.
    #[arg(long)]
    pub instance: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<(Instance, Option<Allocation>)> {
        match (&self.fixture, &self.instance) {
            (Some(name), _) => {
                let f = fixture(name)?;
                Ok((f.instance, f.pinned))
            }
            (None, Some(path)) => Ok((parse_instance(&read(path)?)?, None)),
            (None, None) => unreachable!("clap requires one source"),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StopArg {
    Complete,
    SecondToLast,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub source: Source,
    /// round_robin (rr), envy_cycle_elimination (ece), prop1_subadditive,
    /// prop1_submodular_fast, max_nash_welfare (mnw).
    #[arg(long, default_value = "prop1_submodular_fast")]
    pub alg: String,
    /// Round-robin agent order as 0-based indices, e.g. `1,0`.
    #[arg(long, value_delimiter = ',')]
    pub order: Option<Vec<usize>>,
    /// Round-robin stopping point.
    #[arg(long, value_enum)]
    pub stop: Option<StopArg>,
    /// Write the run trace as JSON lines to this path.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Write the result document here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Prop,
    Prop1,
    Ef1,
    Mef1,
    Po,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub source: Source,
    /// Allocation JSON document.
    #[arg(long, conflicts_with = "pinned")]
    pub allocation: Option<PathBuf>,
    /// Use the fixture's distinguished allocation.
    #[arg(long)]
    pub pinned: bool,
    /// Properties that must hold for exit code 0.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub require: Vec<Property>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub class: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub magnitude: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A claim id such as `T3.1`; see the table printed by `--all`.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    pub claim: Option<String>,
    #[arg(long)]
    pub all: bool,
    /// Trials per randomized suite; defaults vary per claim.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Print the suite results as JSON instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = "satiating-submodular")]
    pub class: String,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 8)]
    pub m: usize,
    /// Trial `t` uses seed `seed + t`.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Run(a) => cmd_run(&a, out, err),
        Command::Check(a) => cmd_check(&a, out),
        Command::Gen(a) => cmd_gen(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Bench(a) => cmd_bench(&a, out),
    }
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn emit(bytes: &[u8], path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, bytes)?,
        None => out.write_all(bytes)?,
    }
    Ok(())
}

fn pretty<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

#[derive(Serialize)]
struct RunOutput<'a> {
    algorithm: &'static str,
    allocation: &'a Allocation,
    while_loop_executions: usize,
    item_moves: usize,
    report: FairnessReport,
}

fn cmd_run(a: &RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let (inst, _) = a.source.load()?;
    let alg: Algorithm = a.alg.parse()?;
    if alg != Algorithm::RoundRobin && (a.order.is_some() || a.stop.is_some()) {
        return Err(Error::Contract(
            "--order and --stop only apply to round_robin".into(),
        ));
    }
    if !alg.suits(&inst) {
        writeln!(
            err,
            "warning: {alg} has no guarantee for the declared valuation classes"
        )?;
    }
    let (alloc, trace): (Allocation, RunTrace) = match alg {
        Algorithm::RoundRobin => {
            let order = a.order.clone().unwrap_or_else(|| (0..inst.n()).collect());
            let stop = match a.stop {
                Some(StopArg::SecondToLast) => Stop::SecondToLast,
                _ => Stop::Complete,
            };
            round_robin(&inst, &order, stop)?
        }
        _ => algorithms::run(alg, &inst)?,
    };
    if let Some(path) = &a.trace {
        fs::write(path, trace.to_json_lines())?;
    }
    let doc = RunOutput {
        algorithm: alg.name(),
        allocation: &alloc,
        while_loop_executions: trace.while_loop_executions,
        item_moves: trace.item_moves,
        report: FairnessReport::new(&inst, &alloc),
    };
    emit(&pretty(&doc)?, a.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckOutput {
    report: FairnessReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pareto_optimal: Option<bool>,
    required: Vec<String>,
    unmet: Vec<String>,
}

fn property_name(p: Property) -> String {
    p.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> Result<i32> {
    let (inst, pinned) = a.source.load()?;
    let alloc = match (&a.allocation, a.pinned) {
        (Some(path), _) => parse_allocation(&read(path)?)?,
        (None, true) => {
            pinned.ok_or_else(|| Error::Contract("this source has no pinned allocation".into()))?
        }
        (None, false) => return Err(Error::Contract("pass --allocation or --pinned".into())),
    };
    let check = validate_allocation(&inst, &alloc);
    if !check.is_ok() {
        let list: Vec<String> = check.violations.iter().map(ToString::to_string).collect();
        return Err(Error::Contract(format!(
            "invalid allocation: {}",
            list.join(", ")
        )));
    }
    let report = FairnessReport::new(&inst, &alloc);
    let pareto_optimal = if a.require.contains(&Property::Po) {
        Some(fairness::is_pareto_optimal(&inst, &alloc)?)
    } else {
        None
    };
    let mut unmet = Vec::new();
    for &p in &a.require {
        let holds = match p {
            Property::Prop => report.is_proportional.ok_or_else(|| {
                Error::Contract("proportionality needs a complete allocation".into())
            })?,
            Property::Prop1 => report.is_prop1,
            Property::Ef1 => report.is_ef1,
            Property::Mef1 => report.is_mef1,
            Property::Po => pareto_optimal == Some(true),
        };
        if !holds {
            unmet.push(property_name(p));
        }
    }
    let code = if unmet.is_empty() {
        EXIT_OK
    } else {
        EXIT_UNMET
    };
    let doc = CheckOutput {
        report,
        pareto_optimal,
        required: a.require.iter().map(|&p| property_name(p)).collect(),
        unmet,
    };
    out.write_all(&pretty(&doc)?)?;
    Ok(code)
}

fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let class: ValuationClass = a.class.parse()?;
    let spec = GenSpec {
        seed: a.seed,
        n: a.n,
        m: a.m,
        class,
        magnitude: a.magnitude,
    };
    let inst = generate(&spec)?;
    emit(&serialize_instance(&inst), a.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let results: Vec<TheoremSuiteResult> = match &a.claim {
        Some(id) => vec![verify_claim(id.parse::<ClaimId>()?, a.trials, a.seed)?],
        None if a.trials.is_some() => ClaimId::ALL
            .into_iter()
            .map(|c| verify_claim(c, a.trials, a.seed))
            .collect::<Result<_>>()?,
        None => verify_all(a.seed)?,
    };
    if a.json {
        out.write_all(&pretty(&results)?)?;
    } else {
        out.write_all(traceability_table(&results).as_bytes())?;
    }
    Ok(if results.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_UNMET
    })
}

/// Plain-text table, one row per suite, then detail lines for failures and controls.
pub fn traceability_table(results: &[TheoremSuiteResult]) -> String {
    let mut s = format!(
        "{:<6} {:<8} {:>6} {:>9}  {:<4}  {}\n",
        "claim", "kind", "trials", "checks", "ok", "statement"
    );
    for r in results {
        s.push_str(&format!(
            "{:<6} {:<8} {:>6} {:>9}  {:<4}  {}\n",
            r.claim.name(),
            if r.negative_control {
                "control"
            } else {
                "suite"
            },
            r.trials,
            r.checks,
            if r.passed { "PASS" } else { "FAIL" },
            r.description
        ));
        for d in &r.details {
            s.push_str(&format!("{:<6}   {d}\n", ""));
        }
        if let Some(c) = &r.counterexample {
            s.push_str(&format!(
                "{:<6}   counterexample: {} (n={}, m={})\n",
                "",
                c.reason,
                c.instance.n(),
                c.instance.m()
            ));
        }
    }
    s
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    let class: ValuationClass = a.class.parse()?;
    writeln!(
        out,
        "seed,n,m,alg1_loops,alg1_item_moves,alg1_prop1,fast_loops,fast_item_moves,fast_prop1,bound_nm,bound_m"
    )?;
    for t in 0..a.trials {
        let seed = a.seed.wrapping_add(t as u64);
        let inst = generate(&GenSpec::new(class, a.n, a.m, seed))?;
        let (slow, slow_trace) = algorithms::prop1_subadditive(&inst)?;
        let (fast, fast_trace) = algorithms::prop1_submodular_fast(&inst)?;
        writeln!(
            out,
            "{seed},{},{},{},{},{},{},{},{},{},{}",
            a.n,
            a.m,
            slow_trace.while_loop_executions,
            slow_trace.item_moves,
            fairness::is_prop1(&inst, &slow),
            fast_trace.while_loop_executions,
            fast_trace.item_moves,
            fairness::is_prop1(&inst, &fast),
            a.n * a.m,
            a.m
        )?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("propone").chain(args.iter().copied());
        let code = execute(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn check_exit_codes_on_pinned_xos7() {
        assert_eq!(
            run(&["check", "--fixture", "xos7", "--pinned", "--require", "ef1"]).0,
            0
        );
        assert_eq!(
            run(&[
                "check",
                "--fixture",
                "xos7",
                "--pinned",
                "--require",
                "prop1"
            ])
            .0,
            1
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(&["run"]).0, 2);
        assert_eq!(run(&["run", "--fixture", "nope"]).0, 2);
        assert_eq!(
            run(&["gen", "--class", "additive", "--n", "2", "--m", "3"]).0,
            2
        );
        assert_eq!(run(&["verify", "--claim", "X1"]).0, 2);
        assert_eq!(run(&["bench", "--class", "weird"]).0, 2);
    }

    #[test]
    fn ece_on_satiating_is_an_error() {
        let (code, _, err) = run(&["run", "--fixture", "rr_satiating", "--alg", "ece"]);
        assert_eq!(code, 2);
        assert!(err.contains("monotone"));
    }

    #[test]
    fn mismatched_algorithm_warns_but_runs() {
        let (code, out, err) = run(&["run", "--fixture", "xos7", "--alg", "round_robin"]);
        assert_eq!(code, 0);
        assert!(err.starts_with("warning:"));
        assert!(out.contains("\"report\""));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }
}

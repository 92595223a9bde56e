//! Command-line front end.
//!
//! Exit codes: 0 when the command succeeds (a criterion holds, every verdict
//! is consistent), 1 when a criterion fails with a witness or a verify run
//! finds an inconsistency, 2 on any operational error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{self, CorpusError, GroupDescriptor};
use crate::criteria::{self, Criterion, CriterionReport, TheoremVerdicts, WitnessKind};
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::perm::{gcd, Permutation};
use crate::structure::{self, SubgroupLattice};

pub const ORDER_CAP_ENV: &str = "GROUPLAB_ORDER_CAP";

#[derive(Debug, Parser)]
#[command(name = "grouplab", version, about = "Finite permutation group analysis and criterion checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a structure report for one group.
    Analyze {
        /// `builtin:<name>[:<param>]` or a group file path.
        target: String,
    },
    /// Run one criterion and print the verdict with any witness.
    Check(CheckArgs),
    /// Like `check`, but print only the witness.
    Witness(CheckArgs),
    /// Run every criterion and audit over a corpus of groups.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub criterion: Criterion,
    /// Prime for `t5`.
    #[arg(long)]
    pub prime: Option<u64>,
    pub target: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Every subgroup of the symmetric group on this many points (1..=5).
    #[arg(long)]
    pub symmetric_subgroups: Option<usize>,
    /// The builtin corpus.
    #[arg(long)]
    pub builtin_all: bool,
    /// A directory of group files.
    #[arg(long)]
    pub dir: Option<PathBuf>,
    /// Skip groups above this order (applied after generation).
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Write the machine-readable report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Group(#[from] crate::error::GroupError),
    #[error("bad target {0:?}: expected builtin:<name>[:<param>] or a file path")]
    BadTarget(String),
    #[error("criterion t5 needs --prime")]
    MissingPrime,
    #[error("--prime only applies to t5")]
    UnexpectedPrime,
    #[error("the selected corpus is empty")]
    EmptyCorpus,
    #[error("invalid {ORDER_CAP_ENV}: {0:?}")]
    BadOrderCap(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("failed to serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

/// Closure cap from the environment, defaulting to [`DEFAULT_ORDER_CAP`].
pub fn order_cap() -> Result<usize, CliError> {
    match std::env::var(ORDER_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or(CliError::BadOrderCap(v)),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

/// Resolves `builtin:<spec>` or a group file path.
pub fn resolve_target(target: &str, cap: usize) -> Result<GroupDescriptor, CliError> {
    if let Some(spec) = target.strip_prefix("builtin:") {
        return Ok(corpus::parse_builtin(spec)?);
    }
    if target.is_empty() {
        return Err(CliError::BadTarget(target.to_string()));
    }
    Ok(corpus::parse_group_file_capped(Path::new(target), cap)?)
}

/// Parses `args` and runs the command, writing human output to `out` and
/// errors to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let result = match cli.command {
        Command::Analyze { target } => cmd_analyze(&target, out),
        Command::Check(args) => cmd_check(&args, false, out),
        Command::Witness(args) => cmd_check(&args, true, out),
        Command::Verify(args) => cmd_verify(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<output>"),
        source: e,
    }
}

pub fn cmd_analyze(target: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let cap = order_cap()?;
    let desc = resolve_target(target, cap)?;
    let g = desc.build_capped(cap)?;
    write_analysis(&desc.name, &g, out).map_err(io_err)?;
    Ok(0)
}

fn write_analysis(name: &str, g: &FiniteGroup, out: &mut dyn Write) -> std::io::Result<()> {
    let spectrum: Vec<String> = g.prime_spectrum().iter().map(u64::to_string).collect();
    writeln!(out, "group        {name}")?;
    writeln!(out, "degree       {}", g.degree())?;
    writeln!(out, "order        {}", g.order())?;
    writeln!(out, "primes       {{{}}}", spectrum.join(", "))?;
    writeln!(out, "center       order {}", g.center().order())?;
    let derived = structure::derived_series(g);
    let lcs = structure::lower_central_series(g);
    writeln!(out, "derived      {:?}", derived.orders())?;
    writeln!(out, "lower central {:?}", lcs.orders())?;
    writeln!(out, "derived subgroup order {}", derived.terms.get(1).map_or(1, |s| s.order()))?;
    writeln!(out, "soluble      {}", yes_no(derived.terminated))?;
    writeln!(out, "nilpotent    {}", yes_no(structure::is_nilpotent(g)))?;
    writeln!(out, "derived nilpotent {}", yes_no(criteria::derived_is_nilpotent(g)))?;
    if !g.prime_spectrum().is_empty() {
        writeln!(out)?;
        writeln!(
            out,
            "{:>5} {:>7} {:>7} {:>8} {:>10} {:>12} {:>6}",
            "p", "|Syl|", "n_p", "closed", "nilpotent", "decomposable", "|O_p|"
        )?;
    }
    for &p in g.prime_spectrum() {
        let sylows = structure::sylow_subgroups(g, p);
        let closed = structure::is_p_closed(g, p);
        let nilp = structure::is_p_nilpotent(g, p);
        writeln!(
            out,
            "{:>5} {:>7} {:>7} {:>8} {:>10} {:>12} {:>6}",
            p,
            sylows[0].order(),
            sylows.len(),
            yes_no(closed),
            yes_no(nilp),
            yes_no(closed && nilp),
            structure::p_core(g, p).order()
        )?;
    }
    writeln!(out)?;
    match SubgroupLattice::new(g) {
        Ok(lattice) => {
            writeln!(out, "subgroups    {}", lattice.len())?;
            writeln!(out, "frattini     order {}", lattice.frattini().order())?;
            match lattice.schmidt_subgroups() {
                Ok(s) => {
                    let orders: Vec<usize> = s.iter().map(|x| x.s.order()).collect();
                    writeln!(out, "schmidt      {} {:?}", s.len(), orders)?
                }
                Err(e) => writeln!(out, "schmidt      error: {e}")?,
            }
        }
        Err(e) => writeln!(out, "lattice      skipped ({e})")?,
    }
    Ok(())
}

fn write_report(r: &CriterionReport, out: &mut dyn Write) -> std::io::Result<()> {
    match r.prime {
        Some(p) => writeln!(out, "criterion    {} (p = {p})", r.criterion)?,
        None => writeln!(out, "criterion    {}", r.criterion)?,
    }
    writeln!(out, "holds        {}", yes_no(r.holds))?;
    writeln!(
        out,
        "structure    {}: {}",
        r.criterion.structure_name(),
        yes_no(r.structural_verdict)
    )?;
    writeln!(out, "consistent   {}", yes_no(r.consistent))?;
    if r.witness.is_some() {
        write_witness(r, out)?;
    }
    Ok(())
}

fn write_witness(r: &CriterionReport, out: &mut dyn Write) -> std::io::Result<()> {
    let Some(w) = &r.witness else {
        return writeln!(out, "no witness: {} holds", r.criterion);
    };
    writeln!(out, "witness      a = {}  (order {})", w.a, w.order_a)?;
    writeln!(out, "             b = {}  (order {})", w.b, w.order_b)?;
    let relation = match w.kind {
        WitnessKind::Inequality => format!("|ab| = {} < {}", w.product_order, w.order_a * w.order_b),
        WitnessKind::Equality => format!("|ab| = {} != {}", w.product_order, w.order_a * w.order_b),
        WitnessKind::Permutability => format!("ab != ba  (|ab| = {})", w.product_order),
    };
    writeln!(out, "             ab = {}  {relation}", w.a.then(&w.b))
}

pub fn cmd_check(args: &CheckArgs, witness_only: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    match (args.criterion, args.prime) {
        (Criterion::T5, None) => return Err(CliError::MissingPrime),
        (c, Some(_)) if c != Criterion::T5 => return Err(CliError::UnexpectedPrime),
        _ => {}
    }
    let cap = order_cap()?;
    let desc = resolve_target(&args.target, cap)?;
    let g = desc.build_capped(cap)?;
    let report = criteria::check(&g, args.criterion, args.prime)?;
    if witness_only {
        write_witness(&report, out).map_err(io_err)?;
    } else {
        writeln!(out, "group        {} (order {})", desc.name, g.order()).map_err(io_err)?;
        write_report(&report, out).map_err(io_err)?;
    }
    Ok(if report.holds { 0 } else { 1 })
}

/// Witness as written to the JSON report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub a: String,
    pub b: String,
    pub order_a: u64,
    pub order_b: u64,
    pub order_ab: u64,
}

impl WitnessRecord {
    /// Re-checks the witness from its cycle strings alone: the orders,
    /// coprimality, the product order, and the violated condition.
    pub fn reverify(&self, criterion: Criterion) -> bool {
        let max_point = |s: &str| {
            s.split(|c: char| !c.is_ascii_digit())
                .filter_map(|t| t.parse::<usize>().ok())
                .max()
                .unwrap_or(1)
        };
        let degree = max_point(&self.a).max(max_point(&self.b));
        let (Ok(a), Ok(b)) = (
            Permutation::parse_cycles(&self.a, degree),
            Permutation::parse_cycles(&self.b, degree),
        ) else {
            return false;
        };
        let ab = a.then(&b);
        let (oa, ob, oab) = (a.order(), b.order(), ab.order());
        let violated = match criterion.witness_kind() {
            WitnessKind::Inequality => oab < oa * ob,
            WitnessKind::Equality => oab != oa * ob,
            WitnessKind::Permutability => ab != b.then(&a),
        };
        oa == self.order_a
            && ob == self.order_b
            && oab == self.order_ab
            && gcd(oa, ob) == 1
            && violated
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub criterion: Criterion,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prime: Option<u64>,
    pub holds: bool,
    pub structural: bool,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessRecord>,
}

impl From<&CriterionReport> for VerdictRecord {
    fn from(r: &CriterionReport) -> Self {
        VerdictRecord {
            criterion: r.criterion,
            prime: r.prime,
            holds: r.holds,
            structural: r.structural_verdict,
            consistent: r.consistent,
            witness: r.witness.as_ref().map(|w| WitnessRecord {
                a: w.a.to_string(),
                b: w.b.to_string(),
                order_a: w.order_a,
                order_b: w.order_b,
                order_ab: w.product_order,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub name: String,
    pub order: usize,
    pub verdicts: Vec<VerdictRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub group_count: usize,
    pub order_histogram: BTreeMap<usize, usize>,
}

/// One verify run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub corpus: CorpusSummary,
    pub groups: Vec<GroupRecord>,
    pub all_consistent: bool,
    pub timings: BTreeMap<String, f64>,
}

/// A corpus entry after generation.
pub struct VerifiedGroup {
    pub name: String,
    pub verdicts: TheoremVerdicts,
}

/// Collects the descriptors selected by `args`.
pub fn collect_corpus(args: &VerifyArgs, cap: usize) -> Result<Vec<GroupDescriptor>, CliError> {
    let mut descs = Vec::new();
    if let Some(n) = args.symmetric_subgroups {
        descs.extend(corpus::subgroups_of_symmetric(n)?);
    }
    if args.builtin_all {
        descs.extend(corpus::builtin_all());
    }
    if let Some(dir) = &args.dir {
        let entries = std::fs::read_dir(dir).map_err(|source| CliError::Io {
            path: dir.clone(),
            source,
        })?;
        let mut paths: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .collect();
        paths.sort();
        for p in paths {
            descs.push(corpus::parse_group_file_capped(&p, cap)?);
        }
    }
    Ok(descs)
}

/// Builds, filters and verifies every descriptor; results sorted by name.
pub fn verify_corpus(
    descs: &[GroupDescriptor],
    cap: usize,
    max_order: Option<usize>,
) -> Result<(Vec<VerifiedGroup>, BTreeMap<String, f64>), CliError> {
    let mut timings = BTreeMap::new();
    let t = Instant::now();
    let groups: Vec<(String, FiniteGroup)> = descs
        .par_iter()
        .map(|d| d.build_capped(cap).map(|g| (d.name.clone(), g)))
        .collect::<Result<_, _>>()?;
    let groups: Vec<(String, FiniteGroup)> = groups
        .into_iter()
        .filter(|(_, g)| max_order.is_none_or(|m| g.order() <= m))
        .collect();
    timings.insert("generate".to_string(), t.elapsed().as_secs_f64());

    let t = Instant::now();
    let mut verified: Vec<VerifiedGroup> = groups
        .par_iter()
        .map(|(name, g)| VerifiedGroup {
            name: name.clone(),
            verdicts: criteria::verify_group(g),
        })
        .collect();
    verified.sort_by(|a, b| a.name.cmp(&b.name));
    timings.insert("verify".to_string(), t.elapsed().as_secs_f64());
    Ok((verified, timings))
}

pub fn build_run_report(verified: &[VerifiedGroup], timings: BTreeMap<String, f64>) -> RunReport {
    let mut histogram = BTreeMap::new();
    for v in verified {
        *histogram.entry(v.verdicts.order).or_insert(0) += 1;
    }
    RunReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        corpus: CorpusSummary {
            group_count: verified.len(),
            order_histogram: histogram,
        },
        groups: verified
            .iter()
            .map(|v| GroupRecord {
                name: v.name.clone(),
                order: v.verdicts.order,
                verdicts: v.verdicts.reports.iter().map(VerdictRecord::from).collect(),
            })
            .collect(),
        all_consistent: verified.iter().all(|v| v.verdicts.all_consistent()),
        timings,
    }
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let cap = order_cap()?;
    let t = Instant::now();
    let descs = collect_corpus(args, cap)?;
    if descs.is_empty() {
        return Err(CliError::EmptyCorpus);
    }
    let load = t.elapsed().as_secs_f64();
    let (verified, mut timings) = verify_corpus(&descs, cap, args.max_order)?;
    if verified.is_empty() {
        return Err(CliError::EmptyCorpus);
    }
    timings.insert("load".to_string(), load);
    let report = build_run_report(&verified, timings);

    let w = |e| io_err(e);
    writeln!(
        out,
        "{:<34} {:>6}  {:<4} {:<4} {:<4} {:<4} {:<9} {:<6} {:<5}",
        "group", "order", "t2", "c21", "bw", "c51", "t5", "focal", "ok"
    )
    .map_err(w)?;
    for v in &verified {
        let mark = |c: Criterion| {
            v.verdicts
                .report(c, None)
                .map_or("-", |r| if r.holds { "T" } else { "F" })
        };
        let t5: String = v
            .verdicts
            .reports
            .iter()
            .filter(|r| r.criterion == Criterion::T5)
            .map(|r| if r.holds { 'T' } else { 'F' })
            .collect();
        let focal_ok = v.verdicts.focal.iter().all(|f| f.matches);
        writeln!(
            out,
            "{:<34} {:>6}  {:<4} {:<4} {:<4} {:<4} {:<9} {:<6} {:<5}",
            v.name,
            v.verdicts.order,
            mark(Criterion::T2),
            mark(Criterion::C21),
            mark(Criterion::Bw),
            mark(Criterion::C51),
            if t5.is_empty() { "-".to_string() } else { t5 },
            yes_no(focal_ok),
            yes_no(v.verdicts.all_consistent())
        )
        .map_err(w)?;
        for problem in &v.verdicts.problems {
            writeln!(out, "    problem: {problem}").map_err(w)?;
        }
    }
    writeln!(
        out,
        "\n{} groups, all consistent: {}",
        report.corpus.group_count,
        yes_no(report.all_consistent)
    )
    .map_err(w)?;

    if let Some(path) = &args.json {
        let text = serde_json::to_string_pretty(&report)?;
        std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(if report.all_consistent { 0 } else { 1 })
}

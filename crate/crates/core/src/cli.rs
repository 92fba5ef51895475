//! Command-line front end.
//!
//! Every command produces an [`OutputRecord`]; `--format json` prints it as
//! JSON, otherwise a plain-text rendering is printed. Exit codes: 0 on
//! success, 1 on bad input, 2 on an internal inconsistency.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, RealSimpleAlgebra, SemisimpleRealAlgebra};
use crate::checker::{self, Ambient, Outcome, Survey, SurveyRow, Verdict};
use crate::error::{Error, Result};
use crate::poincare::{self, IntPolynomial};
use crate::subalg;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "cliffklein",
    version,
    about = "Obstructions to compact Clifford-Klein forms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Show every row and per-polynomial evidence.
    #[arg(long)]
    pub verbose: bool,
    /// Report wall-clock time (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verdict for a single pair (g, h).
    Check {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[command(flatten)]
        common: Common,
    },
    /// Survey all regular split subalgebras of a split ambient algebra.
    SurveySplit {
        #[arg(long)]
        g: String,
        /// Accept classical split ambients such as sl(n,R).
        #[arg(long)]
        allow_nonexceptional: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Survey the subalgebras listed in a candidate file.
    SurveyCandidates {
        #[arg(long)]
        g: String,
        #[arg(long)]
        candidates: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Invariants of a real semisimple algebra.
    Info {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        common: Common,
    },
    /// Candidate Poincaré polynomials of the compact dual of G/K.
    Poincare {
        #[arg(long)]
        g: String,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Check { common, .. }
            | Command::SurveySplit { common, .. }
            | Command::SurveyCandidates { common, .. }
            | Command::Info { common, .. }
            | Command::Poincare { common, .. } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::SurveySplit { .. } => "survey-split",
            Command::SurveyCandidates { .. } => "survey-candidates",
            Command::Info { .. } => "info",
            Command::Poincare { .. } => "poincare",
        }
    }

    fn inputs(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        match self {
            Command::Check { g, h, .. } => {
                m.insert("g".into(), g.clone());
                m.insert("h".into(), h.clone());
            }
            Command::SurveySplit {
                g,
                allow_nonexceptional,
                ..
            } => {
                m.insert("g".into(), g.clone());
                m.insert(
                    "allow_nonexceptional".into(),
                    allow_nonexceptional.to_string(),
                );
            }
            Command::SurveyCandidates { g, candidates, .. } => {
                m.insert("g".into(), g.clone());
                m.insert("candidates".into(), candidates.display().to_string());
            }
            Command::Info { algebra, .. } => {
                m.insert("algebra".into(), algebra.clone());
            }
            Command::Poincare { g, .. } => {
                m.insert("g".into(), g.clone());
            }
        }
        m.insert("verbose".into(), self.common().verbose.to_string());
        m
    }
}

/// Envelope for every command's JSON output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub tool_version: String,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: CommandResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CommandResult {
    Check(CheckResult),
    Survey(SurveyResult),
    Info(InfoResult),
    Poincare(PoincareResult),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub g: String,
    pub h: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowRecord {
    pub h: String,
    pub outcome: Outcome,
    pub d: usize,
    pub rank_h: usize,
    #[serde(with = "poincare::wire")]
    pub coefficients_at_d: Vec<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sl2_fast_path_agrees: Option<bool>,
}

impl From<&SurveyRow> for RowRecord {
    fn from(r: &SurveyRow) -> Self {
        let e = &r.verdict.evidence;
        RowRecord {
            h: r.h.to_string(),
            outcome: r.verdict.outcome,
            d: e.d,
            rank_h: e.rank_h,
            coefficients_at_d: e.coefficients_at_d.clone(),
            sl2_fast_path_agrees: e.sl2_fast_path_agrees,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyResult {
    pub g: String,
    pub rank_g: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub polynomials: Vec<IntPolynomial>,
    /// Rows with no compact form by the coefficient test.
    pub rows: Vec<RowRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub calabi_markus: Option<Vec<RowRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inconclusive: Option<Vec<RowRecord>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorInfo {
    pub name: String,
    pub dim: usize,
    pub real_rank: usize,
    pub max_compact: String,
    pub torus_rank: usize,
    pub d: usize,
    pub dual_degrees: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InfoResult {
    pub algebra: String,
    pub dim: usize,
    pub real_rank: usize,
    pub d: usize,
    pub torus_rank: usize,
    pub factors: Vec<FactorInfo>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialRecord {
    pub coefficients: IntPolynomial,
    pub degree: usize,
    pub text: String,
    pub negative_coefficient_degrees: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoincareResult {
    pub g: String,
    pub dual_degrees: Vec<u32>,
    pub compact_degrees: Vec<u32>,
    pub expected_degree: usize,
    pub polynomials: Vec<PolynomialRecord>,
}

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Output {
                code,
                stdout,
                stderr,
            };
        }
    };
    run(&cli.command)
}

pub fn run(cmd: &Command) -> Output {
    let common = cmd.common();
    let start = Instant::now();
    let result = match execute(cmd) {
        Ok(r) => r,
        Err(e) => {
            return Output {
                code: exit_code(&e),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let record = OutputRecord {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        command: cmd.name().to_string(),
        inputs: cmd.inputs(),
        result,
        timing_ms: common.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    };
    let stdout = match common.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&record).expect("records serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(&record, common.verbose),
    };
    Output {
        code: 0,
        stdout,
        stderr: String::new(),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_internal() {
        2
    } else {
        1
    }
}

fn parse_simple(name: &str) -> Result<RealSimpleAlgebra> {
    let sum = catalog::parse_algebra(name)?;
    sum.as_simple()
        .copied()
        .ok_or_else(|| Error::Input(format!("'{name}' is not simple")))
}

pub fn execute(cmd: &Command) -> Result<CommandResult> {
    let verbose = cmd.common().verbose;
    match cmd {
        Command::Check { g, h, .. } => {
            let g = parse_simple(g)?;
            let h = catalog::parse_algebra(h)?;
            let verdict = checker::check_pair(&g, &h)?;
            Ok(CommandResult::Check(CheckResult {
                g: g.to_string(),
                h: h.to_string(),
                verdict,
            }))
        }
        Command::SurveySplit {
            g,
            allow_nonexceptional,
            ..
        } => {
            let g = parse_simple(g)?;
            if !g.is_split() {
                return Err(Error::Input(format!("{g} is not a split real form")));
            }
            if !*allow_nonexceptional && !matches!(g.form(), catalog::RealForm::Exceptional(_)) {
                return Err(Error::Input(format!(
                    "{g} is classical; pass --allow-nonexceptional to survey it"
                )));
            }
            let survey = checker::survey_split(g.complex_type())?;
            Ok(CommandResult::Survey(survey_result(&survey, None, verbose)))
        }
        Command::SurveyCandidates { g, candidates, .. } => {
            let g = parse_simple(g)?;
            let cl = subalg::load_candidates(candidates)?;
            let survey = checker::survey_candidates(&g, &cl)?;
            Ok(CommandResult::Survey(survey_result(
                &survey,
                Some(cl.source),
                verbose,
            )))
        }
        Command::Info { algebra, .. } => {
            let a = catalog::parse_algebra(algebra)?;
            Ok(CommandResult::Info(info_result(&a)))
        }
        Command::Poincare { g, .. } => {
            let g = parse_simple(g)?;
            let ambient = Ambient::new(g)?;
            let polynomials = ambient
                .polynomials
                .iter()
                .map(|p| PolynomialRecord {
                    coefficients: p.clone(),
                    degree: p.degree().unwrap_or(0),
                    text: p.to_string(),
                    negative_coefficient_degrees: p.negative_degrees(),
                })
                .collect();
            Ok(CommandResult::Poincare(PoincareResult {
                g: g.to_string(),
                dual_degrees: ambient.degrees.big_degrees.clone(),
                compact_degrees: ambient.degrees.compact_degrees.clone(),
                expected_degree: ambient.degrees.expected_degree(),
                polynomials,
            }))
        }
    }
}

fn survey_result(s: &Survey, source: Option<String>, verbose: bool) -> SurveyResult {
    let rows_of = |o: Outcome| s.with_outcome(o).map(RowRecord::from).collect::<Vec<_>>();
    SurveyResult {
        g: s.g.to_string(),
        rank_g: s.g.invariants().real_rank,
        source,
        polynomials: s.polynomials.clone(),
        rows: rows_of(Outcome::NoCK_Tholozan),
        calabi_markus: verbose.then(|| rows_of(Outcome::NoCK_CalabiMarkus)),
        inconclusive: verbose.then(|| rows_of(Outcome::Inconclusive)),
    }
}

fn info_result(a: &SemisimpleRealAlgebra) -> InfoResult {
    let factors: Vec<FactorInfo> = a
        .factors()
        .iter()
        .map(|f| {
            let inv = f.invariants();
            FactorInfo {
                name: f.to_string(),
                dim: inv.dim,
                real_rank: inv.real_rank,
                max_compact: inv.max_compact.to_string(),
                torus_rank: inv.torus_rank,
                d: inv.d,
                dual_degrees: inv.dual_degrees,
            }
        })
        .collect();
    InfoResult {
        algebra: a.to_string(),
        dim: factors.iter().map(|f| f.dim).sum(),
        real_rank: factors.iter().map(|f| f.real_rank).sum(),
        d: factors.iter().map(|f| f.d).sum(),
        torus_rank: factors.iter().map(|f| f.torus_rank).sum(),
        factors,
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn outcome_text(o: Outcome) -> &'static str {
    match o {
        Outcome::NoCK_CalabiMarkus => "no compact Clifford-Klein form (equal real ranks)",
        Outcome::NoCK_Tholozan => "no compact Clifford-Klein form (vanishing coefficient)",
        Outcome::Inconclusive => "inconclusive",
    }
}

fn write_rows(out: &mut String, rows: &[RowRecord]) {
    let width = rows.iter().map(|r| r.h.len()).max().unwrap_or(0).max(1);
    for r in rows {
        let _ = writeln!(
            out,
            "  {:<width$}  d = {:>3}  rank = {}",
            r.h, r.d, r.rank_h
        );
    }
}

pub fn render_text(rec: &OutputRecord, verbose: bool) -> String {
    let mut out = String::new();
    match &rec.result {
        CommandResult::Check(c) => {
            let e = &c.verdict.evidence;
            let _ = writeln!(out, "g = {}, h = {}", c.g, c.h);
            let _ = writeln!(out, "outcome: {:?}", c.verdict.outcome);
            let _ = writeln!(out, "  {}", outcome_text(c.verdict.outcome));
            let _ = writeln!(
                out,
                "d = {}, rank g = {}, rank h = {}",
                e.d, e.rank_g, e.rank_h
            );
            if !e.polynomials.is_empty() {
                let nonzero = e
                    .coefficients_at_d
                    .iter()
                    .filter(|c| c.sign() != num_bigint::Sign::NoSign)
                    .count();
                let _ = writeln!(
                    out,
                    "candidate polynomials: {}, nonzero coefficient at d in {}",
                    e.polynomials.len(),
                    nonzero
                );
            }
            if let Some(agrees) = e.sl2_fast_path_agrees {
                let _ = writeln!(out, "sl(2,R) fast path agrees: {agrees}");
            }
            if verbose {
                for (p, c) in e.polynomials.iter().zip(&e.coefficients_at_d) {
                    let _ = writeln!(out, "  [t^{}] = {c} in {p}", e.d);
                }
            }
        }
        CommandResult::Survey(s) => {
            let _ = writeln!(out, "g = {} (real rank {})", s.g, s.rank_g);
            if let Some(src) = &s.source {
                let _ = writeln!(out, "candidates: {src}");
            }
            let _ = writeln!(out, "candidate polynomials: {}", s.polynomials.len());
            if verbose {
                for p in &s.polynomials {
                    let _ = writeln!(out, "  {p}");
                }
            }
            let _ = writeln!(
                out,
                "no compact Clifford-Klein form ({} rows):",
                s.rows.len()
            );
            write_rows(&mut out, &s.rows);
            if let Some(rows) = &s.calabi_markus {
                let _ = writeln!(out, "equal real rank ({} rows):", rows.len());
                write_rows(&mut out, rows);
            }
            if let Some(rows) = &s.inconclusive {
                let _ = writeln!(out, "inconclusive ({} rows):", rows.len());
                write_rows(&mut out, rows);
            }
        }
        CommandResult::Info(i) => {
            let _ = writeln!(out, "{}", i.algebra);
            let _ = writeln!(
                out,
                "dim = {}, real rank = {}, d = {}, center of k = {}",
                i.dim, i.real_rank, i.d, i.torus_rank
            );
            for f in &i.factors {
                let _ = writeln!(
                    out,
                    "  {}: dim = {}, real rank = {}, k = {}{}, d = {}, dual degrees = [{}]",
                    f.name,
                    f.dim,
                    f.real_rank,
                    f.max_compact,
                    if f.torus_rank > 0 {
                        format!(" + R^{}", f.torus_rank)
                    } else {
                        String::new()
                    },
                    f.d,
                    join(&f.dual_degrees)
                );
            }
        }
        CommandResult::Poincare(p) => {
            let _ = writeln!(out, "g = {}", p.g);
            let _ = writeln!(out, "dual degrees = [{}]", join(&p.dual_degrees));
            let _ = writeln!(out, "compact degrees = [{}]", join(&p.compact_degrees));
            let _ = writeln!(out, "expected degree = {}", p.expected_degree);
            let _ = writeln!(out, "candidate polynomials ({}):", p.polynomials.len());
            for r in &p.polynomials {
                let _ = write!(out, "  degree {}: {}", r.degree, r.text);
                if !r.negative_coefficient_degrees.is_empty() {
                    let _ = write!(
                        out,
                        "  (negative at [{}])",
                        join(&r.negative_coefficient_degrees)
                    );
                }
                out.push('\n');
            }
        }
    }
    if let Some(ms) = rec.timing_ms {
        let _ = writeln!(out, "time: {ms:.1} ms");
    }
    out
}

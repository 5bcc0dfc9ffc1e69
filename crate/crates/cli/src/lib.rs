//! Command-line front end for `schubert-levi`.
//!
//! [`parse_request`] turns an argument vector into a validated
//! [`AnalysisRequest`]; [`run`] executes it against a single writer. Errors
//! carry the process exit code.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use schubert_levi::bp;
use schubert_levi::classify;
use schubert_levi::grassmann::{GrassmannSchubert, Run, SmoothForm};
use schubert_levi::levi::{self, HeadReport, LeviDescriptor};
use schubert_levi::sweep::{self, Bounds, Check};
use schubert_levi::toroidal;
use schubert_levi::weyl;
use schubert_levi::{Error as CoreError, Execution, ParabolicSet, Permutation, PoincarePolynomial};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;

#[derive(Debug, Error)]
pub enum UsageError {
    #[error("{0}")]
    Arguments(String),
    #[error("{0}")]
    Invalid(#[from] CoreError),
    /// `--help` or `--version`: informational text, not a failure.
    #[error("{0}")]
    Display(String),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] UsageError),
    #[error("{0}")]
    Limit(CoreError),
    #[error("{0}")]
    Core(CoreError),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(UsageError::Display(_)) => EXIT_OK,
            CliError::Usage(_) | CliError::Core(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Limit(_) => EXIT_LIMIT,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::RankLimit { .. } => CliError::Limit(e),
            other => CliError::Core(other),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "schubert", version, about = "Schubert varieties under Levi actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format: human-readable text or JSON lines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest rank for which exhaustive enumeration is allowed.
    #[arg(long, global = true, value_name = "N")]
    rank_limit: Option<usize>,
    /// Run enumerations on a single thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Debug, Args)]
struct Target {
    /// Rank; must agree with the length of --w when both are given.
    #[arg(long)]
    n: Option<usize>,
    /// Permutation in one-line notation, e.g. 3,4,1,2.
    #[arg(long)]
    w: String,
    /// Work in the Grassmannian of d-planes (J = Δ minus {d}).
    #[arg(long, conflicts_with = "parabolic")]
    d: Option<usize>,
    /// Simple roots of the parabolic J, e.g. 1,3. Defaults to the empty set.
    #[arg(long)]
    parabolic: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants of X_{wQ_J}: length, Poincaré polynomial, l_max, heads, boundary.
    Analyze {
        #[command(flatten)]
        target: Target,
        /// Levi simple roots; defaults to l_max of w.
        #[arg(long)]
        levi: Option<String>,
    },
    /// L_I-stable Schubert subvarieties of X_{wQ_J}.
    Heads {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        levi: String,
    },
    /// Necessary conditions for a Grassmannian Schubert variety to be toroidal.
    Toroidal {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        w: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        levi: String,
    },
    /// Parabolic decomposition w = v·u and the BP characterizations.
    Bp {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        w: String,
        /// J_P, the parabolic of the total space. Defaults to the empty set.
        #[arg(long)]
        parabolic: Option<String>,
        /// K, the parabolic of the base.
        #[arg(long, required_unless_present = "d", conflicts_with = "d")]
        quotient: Option<String>,
        /// Use the maximal parabolic K = Δ minus {d}.
        #[arg(long)]
        d: Option<usize>,
        /// Transport the toroidal check to the Grassmannian base (needs --d).
        #[arg(long, requires = "d")]
        levi: Option<String>,
    },
    /// Exhaustive verification sweep.
    Sweep {
        #[arg(long, value_parser = check_names())]
        check: String,
        #[arg(long, default_value_t = sweep::DEFAULT_MAX_N)]
        max_n: usize,
        /// Parameter bound for the classification check.
        #[arg(long, default_value_t = sweep::DEFAULT_MAX_M)]
        max_m: usize,
    },
    /// Horospherical case table and its dimension inequalities.
    Classify {
        #[arg(long, default_value_t = sweep::DEFAULT_MAX_M)]
        max_m: usize,
    },
}

fn check_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(Check::ALL.map(Check::name))
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisRequest {
    pub format: Format,
    pub rank_limit: Option<usize>,
    pub mode: Execution,
    pub action: Action,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Action {
    Analyze {
        w: Permutation,
        parabolic: ParabolicSet,
        d: Option<usize>,
        levi: Option<ParabolicSet>,
    },
    Heads {
        w: Permutation,
        parabolic: ParabolicSet,
        levi: ParabolicSet,
    },
    Toroidal {
        subject: GrassmannSchubert,
        levi: ParabolicSet,
    },
    Bp {
        w: Permutation,
        parabolic: ParabolicSet,
        quotient: ParabolicSet,
        transport: Option<(usize, ParabolicSet)>,
    },
    Sweep {
        check: Check,
        bounds: Bounds,
    },
    Classify {
        max_m: usize,
    },
}

fn parse_perm(n: Option<usize>, w: &str) -> Result<Permutation, UsageError> {
    let p: Permutation = w.parse()?;
    if let Some(n) = n {
        if n != p.rank() {
            return Err(UsageError::Arguments(format!(
                "--n {n} does not match the rank {} of --w {w}",
                p.rank()
            )));
        }
    }
    Ok(p)
}

fn parse_set(n: usize, s: Option<&str>) -> Result<ParabolicSet, UsageError> {
    Ok(ParabolicSet::parse(n, s.unwrap_or(""))?)
}

fn resolve_target(t: &Target) -> Result<(Permutation, ParabolicSet), UsageError> {
    let w = parse_perm(t.n, &t.w)?;
    let j = match t.d {
        Some(d) => ParabolicSet::maximal(w.rank(), d)?,
        None => parse_set(w.rank(), t.parabolic.as_deref())?,
    };
    weyl::require_min_coset_rep(&w, &j)?;
    Ok((w, j))
}

/// Parses and validates an argument vector (including the program name).
pub fn parse_request<I, T>(argv: I) -> Result<AnalysisRequest, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            UsageError::Display(e.to_string())
        }
        _ => UsageError::Arguments(e.to_string()),
    })?;
    if cli.rank_limit == Some(0) {
        return Err(UsageError::Arguments("--rank-limit must be positive".into()));
    }
    let action = match &cli.command {
        Command::Analyze { target, levi } => {
            let (w, parabolic) = resolve_target(target)?;
            let levi = levi
                .as_deref()
                .map(|s| parse_set(w.rank(), Some(s)))
                .transpose()?;
            Action::Analyze { w, parabolic, d: target.d, levi }
        }
        Command::Heads { target, levi } => {
            let (w, parabolic) = resolve_target(target)?;
            let levi = parse_set(w.rank(), Some(levi))?;
            Action::Heads { w, parabolic, levi }
        }
        Command::Toroidal { n, w, d, levi } => {
            let p = parse_perm(*n, w)?;
            let levi = parse_set(p.rank(), Some(levi))?;
            let subject = GrassmannSchubert::new(p, *d)?;
            Action::Toroidal { subject, levi }
        }
        Command::Bp { n, w, parabolic, quotient, d, levi } => {
            let p = parse_perm(*n, w)?;
            let rank = p.rank();
            let jp = parse_set(rank, parabolic.as_deref())?;
            let k = match d {
                Some(d) => ParabolicSet::maximal(rank, *d)?,
                None => parse_set(rank, quotient.as_deref())?,
            };
            let transport = match (d, levi) {
                (Some(d), Some(l)) => Some((*d, parse_set(rank, Some(l))?)),
                _ => None,
            };
            weyl::require_min_coset_rep(&p, &jp)?;
            if !jp.is_subset(&k) {
                return Err(UsageError::Arguments(format!(
                    "--parabolic {{{jp}}} must be contained in the base parabolic {{{k}}}"
                )));
            }
            Action::Bp { w: p, parabolic: jp, quotient: k, transport }
        }
        Command::Sweep { check, max_n, max_m } => {
            if *max_n < 2 {
                return Err(UsageError::Arguments("--max-n must be at least 2".into()));
            }
            Action::Sweep {
                check: check.parse()?,
                bounds: Bounds { max_n: *max_n, max_m: *max_m },
            }
        }
        Command::Classify { max_m } => Action::Classify { max_m: *max_m },
    };
    Ok(AnalysisRequest {
        format: cli.format,
        rank_limit: cli.rank_limit,
        mode: if cli.sequential { Execution::Sequential } else { Execution::default() },
        action,
    })
}

/// Result of a successful run. A sweep with failures is not an error but
/// maps to a non-zero exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub violations: u64,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.violations == 0 {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        }
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn braces(s: &ParabolicSet) -> String {
    format!("{{{s}}}")
}

fn list(items: &[Permutation]) -> String {
    if items.is_empty() {
        return "none".into();
    }
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Serialize)]
struct GrassmannInfo {
    d: usize,
    columns: Vec<usize>,
    runs: Vec<Run>,
    dimension: usize,
    smooth_form: Option<SmoothForm>,
    divisors: Vec<Permutation>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    w: Permutation,
    n: usize,
    parabolic: ParabolicSet,
    length: usize,
    right_descents: ParabolicSet,
    left_descents: ParabolicSet,
    poincare: PoincarePolynomial,
    palindromic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    grassmann: Option<GrassmannInfo>,
    l_max: ParabolicSet,
    levi: LeviDescriptor,
    stable: bool,
    heads: HeadReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    boundary: Option<Vec<Permutation>>,
}

fn analyze(
    w: &Permutation,
    j: &ParabolicSet,
    d: Option<usize>,
    levi_set: Option<&ParabolicSet>,
    mode: Execution,
) -> Result<AnalyzeReport, CliError> {
    let poincare = weyl::poincare_polynomial(w, j)?;
    let grassmann = match d {
        Some(d) => {
            let x = GrassmannSchubert::new(w.clone(), d)?;
            let divisors = if x.is_identity() {
                Vec::new()
            } else {
                x.schubert_divisors()?.iter().map(|g| g.permutation().clone()).collect()
            };
            Some(GrassmannInfo {
                d,
                columns: x.column_set(),
                runs: x.runs(),
                dimension: x.dimension(),
                smooth_form: x.smooth_form(),
                divisors,
            })
        }
        None => None,
    };
    let l_max = levi::l_max(w, j)?;
    let levi_set = levi_set.copied().unwrap_or(l_max);
    let stable = levi::is_stable(w, j, &levi_set)?;
    let heads = levi::heads_below_with(w, j, &levi_set, mode)?;
    let boundary = stable.then(|| heads.maximal_proper_heads.clone());
    Ok(AnalyzeReport {
        w: w.clone(),
        n: w.rank(),
        parabolic: *j,
        length: w.length(),
        right_descents: w.right_descents(),
        left_descents: w.left_descents(),
        palindromic: poincare.is_palindromic(),
        poincare,
        grassmann,
        l_max,
        levi: levi::blocks(&levi_set),
        stable,
        heads,
        boundary,
    })
}

fn write_heads_text(out: &mut dyn Write, h: &HeadReport) -> io::Result<()> {
    writeln!(out, "heads ({}): {}", h.heads.len(), list(&h.heads))?;
    match &h.minimal_head {
        Some(m) => writeln!(out, "minimal head: {m}"),
        None => writeln!(out, "minimal head: none"),
    }
}

fn write_analyze_text(out: &mut dyn Write, r: &AnalyzeReport) -> io::Result<()> {
    writeln!(out, "w = {} (n = {}, J = {})", r.w, r.n, braces(&r.parabolic))?;
    writeln!(
        out,
        "length {}; right descents {}; left descents {}",
        r.length,
        braces(&r.right_descents),
        braces(&r.left_descents)
    )?;
    let shape = if r.palindromic { "palindromic" } else { "not palindromic" };
    writeln!(out, "Poincaré polynomial: {} ({shape})", r.poincare)?;
    if let Some(g) = &r.grassmann {
        let cols: Vec<String> = g.columns.iter().map(ToString::to_string).collect();
        writeln!(out, "column set {{{}}}, dimension {}", cols.join(","), g.dimension)?;
        match g.smooth_form {
            Some(SmoothForm { p, m: Some(m) }) => writeln!(out, "smooth form: p = {p}, m = {m}")?,
            Some(SmoothForm { p, m: None }) => writeln!(out, "smooth form: p = {p} (identity)")?,
            None => writeln!(out, "not of smooth form (singular)")?,
        }
        writeln!(out, "Schubert divisors: {}", list(&g.divisors))?;
    }
    writeln!(out, "l_max = {}", braces(&r.l_max))?;
    let blocks: Vec<String> = r
        .levi
        .blocks
        .iter()
        .map(|b| format!("[{}]", b.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    writeln!(
        out,
        "Levi {}: blocks {}; {}",
        braces(&r.levi.levi),
        blocks.join(" "),
        if r.stable { "stable" } else { "not stable" }
    )?;
    write_heads_text(out, &r.heads)?;
    if let Some(b) = &r.boundary {
        writeln!(out, "boundary: {}", list(b))?;
    }
    Ok(())
}

fn write_toroidal_text(out: &mut dyn Write, r: &toroidal::ToroidalReport) -> io::Result<()> {
    writeln!(
        out,
        "X_w for w = {} in Gr({}, {}), Levi {}",
        r.subject.permutation(),
        r.subject.d(),
        r.subject.n(),
        braces(&r.levi.levi)
    )?;
    for d in &r.divisors {
        let reason = match d.criterion {
            toroidal::Criterion::Stable => "criterion 1 (stable)",
            toroidal::Criterion::NoHead => "criterion 2 (contains no orbit)",
            toroidal::Criterion::Violated => "violated",
        };
        write!(out, "  divisor {} (run {}): {reason}", d.w, d.run)?;
        match &d.witness {
            Some(h) => writeln!(out, ", witness head {h}")?,
            None => writeln!(out)?,
        }
    }
    let verdict = match r.verdict {
        toroidal::Verdict::PassesNecessary => "passes-necessary",
        toroidal::Verdict::Fails => "fails (not toroidal)",
    };
    writeln!(out, "verdict: {verdict}")
}

#[derive(Serialize)]
struct BpReport {
    decomposition: bp::BPDecomposition,
    projections: Vec<bp::DivisorProjection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    transport: Option<bp::TransportReport>,
}

fn write_bp_text(out: &mut dyn Write, r: &BpReport) -> io::Result<()> {
    let d = &r.decomposition;
    writeln!(
        out,
        "w = {} = v·u with v = {}, u = {} (J_P = {}, K = {})",
        d.w,
        d.v,
        d.u,
        braces(&d.parabolic),
        braces(&d.quotient)
    )?;
    let c = d.characterizations;
    writeln!(
        out,
        "BP: {} (maximality {}, support {}, Poincaré {})",
        d.bp, c.maximality, c.support, c.poincare
    )?;
    for p in &r.projections {
        let kind = match p.kind {
            bp::ImageKind::Onto => "onto the base",
            bp::ImageKind::Divisor => "onto a divisor of the base",
            bp::ImageKind::Deeper => "codimension ≥ 2 in the base",
        };
        writeln!(out, "  divisor {} -> {} ({kind})", p.divisor, p.image)?;
    }
    if let Some(t) = &r.transport {
        writeln!(
            out,
            "transport: smooth {}, base verdict {:?}, certified non-toroidal {}",
            t.smooth, t.base.verdict, t.certified_non_toroidal
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a sweep::Summary,
}

#[derive(Serialize)]
struct ClassifySummary {
    max_m: usize,
    cases: u64,
    failures: u64,
}

/// Executes a validated request, writing all output to `out`.
pub fn run(request: &AnalysisRequest, out: &mut dyn Write) -> Result<Outcome, CliError> {
    if let Some(limit) = request.rank_limit {
        weyl::set_rank_limit(limit);
    }
    let json = request.format == Format::Json;
    let mode = request.mode;
    let mut violations = 0;
    match &request.action {
        Action::Analyze { w, parabolic, d, levi } => {
            let r = analyze(w, parabolic, *d, levi.as_ref(), mode)?;
            if json {
                json_line(out, &r)?;
            } else {
                write_analyze_text(out, &r)?;
            }
        }
        Action::Heads { w, parabolic, levi } => {
            let r = levi::heads_below_with(w, parabolic, levi, mode)?;
            if json {
                json_line(out, &r)?;
            } else {
                write_heads_text(out, &r)?;
                writeln!(out, "maximal proper heads: {}", list(&r.maximal_proper_heads))?;
            }
        }
        Action::Toroidal { subject, levi } => {
            let r = toroidal::toroidal_necessary_with(subject, levi, mode)?;
            if json {
                json_line(out, &r)?;
            } else {
                write_toroidal_text(out, &r)?;
            }
        }
        Action::Bp { w, parabolic, quotient, transport } => {
            let decomposition = bp::analyze(w, parabolic, quotient)?;
            let projections = bp::project_all_divisors(w, parabolic, quotient)?;
            let transport = match transport {
                Some((d, l)) => Some(bp::transport_toroidal(w, parabolic, *d, l)?),
                None => None,
            };
            let r = BpReport { decomposition, projections, transport };
            if json {
                json_line(out, &r)?;
            } else {
                write_bp_text(out, &r)?;
            }
        }
        Action::Sweep { check, bounds } => {
            let result = sweep::run_with(*check, *bounds, mode)?;
            let s = &result.summary;
            if json {
                for record in &result.records {
                    json_line(out, record)?;
                }
                json_line(out, &SummaryLine { summary: s })?;
            } else {
                for record in result.records.iter().filter(|r| r.failures > 0) {
                    writeln!(
                        out,
                        "FAIL {} {}",
                        record.instance,
                        record.counterexample.as_ref().map(ToString::to_string).unwrap_or_default()
                    )?;
                }
                writeln!(
                    out,
                    "{}: {} instances, {} checks, {} disagreements",
                    s.check, s.instances, s.checked, s.failures
                )?;
            }
            violations = s.failures;
        }
        Action::Classify { max_m } => {
            let cases = classify::all_cases(*max_m);
            let failures = cases.iter().filter(|c| !c.codim_at_least_two()).count() as u64;
            if json {
                for t in classify::pasquier_cases() {
                    json_line(out, &t)?;
                }
                let summary = ClassifySummary { max_m: *max_m, cases: cases.len() as u64, failures };
                json_line(out, &summary)?;
            } else {
                for t in classify::pasquier_cases() {
                    writeln!(
                        out,
                        "({}) type {:?} {}, {}: {}",
                        format!("{:?}", t.tag).to_lowercase(),
                        t.dynkin_type,
                        t.triple,
                        t.constraint,
                        t.homogeneous_space
                    )?;
                }
                writeln!(
                    out,
                    "codimension ≥ 2 for {} of {} cases with m ≤ {max_m}",
                    cases.len() as u64 - failures,
                    cases.len()
                )?;
            }
            violations = failures;
        }
    }
    out.flush()?;
    Ok(Outcome { violations })
}

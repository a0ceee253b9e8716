//! Command-line front end.
//!
//! Exit codes: 0 when every verdict holds, 1 when a statement fails, 2 on
//! invalid input. Reports go to stdout and diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::files::{load_group, load_mu, mu_to_json, to_sorted_json, write_file};
use crate::group::{builtin_group, FiniteGroup};
use crate::harness::{ablation, parse_ablation, run_campaign, Campaign, MuSpec, Report, SuiteFilter, DEFAULT_GROUPS};
use crate::induced::{build_inn_group, check_mu, Hypotheses};
use crate::subset::{FuzzySubset, MuStrategy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fuzzaut", version, about = "Exhaustive checks for fuzzy automorphisms of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification campaign.
    Verify(VerifyArgs),
    /// Generate a pointed normal fuzzy subgroup file.
    GenMu(GenMuArgs),
    /// Report the group of induced inner automorphisms.
    Inn(InnArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Chain,
    Class,
    Random,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `builtin:<token>` or `file:<path>`; the default instance matrix when omitted.
    #[arg(long)]
    pub group: Option<String>,
    /// `auto:chain`, `auto:class`, `auto:random` or `file:<path>`; chain and class when omitted.
    #[arg(long)]
    pub mu: Option<String>,
    /// `all`, `hom`, `aut`, `inner`, `induced` or `thm:<statement id>`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// `pointed` or `normal-mu`.
    #[arg(long)]
    pub ablate: Option<String>,
    /// Record wall time per result.
    #[arg(long)]
    pub timings: bool,
    /// Run with a mu file that fails validation instead of rejecting it;
    /// statements that need a valid mu then fail with the reason.
    #[arg(long)]
    pub allow_invalid_mu: bool,
}

#[derive(Debug, Args)]
pub struct GenMuArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum, default_value = "chain")]
    pub strategy: StrategyArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Args)]
pub struct InnArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, default_value = "auto:class")]
    pub mu: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// An input problem, reported with exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display + std::fmt::Debug> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(format!("{e} ({e:?})"))
    }
}

/// Resolves `builtin:<token>` or `file:<path>`.
pub fn resolve_group(source: &str) -> Result<FiniteGroup, InputError> {
    if let Some(token) = source.strip_prefix("builtin:") {
        Ok(builtin_group(token)?)
    } else if let Some(path) = source.strip_prefix("file:") {
        Ok(load_group(path)?)
    } else {
        Err(InputError(format!("group source {source:?} must start with builtin: or file:")))
    }
}

/// Resolves `auto:<strategy>` or `file:<path>` for `group`. Files must
/// hold a pointed normal fuzzy subgroup.
pub fn resolve_mu(source: &str, group: &Arc<FiniteGroup>, seed: u64) -> Result<MuSpec, InputError> {
    resolve_mu_with(source, group, seed, true)
}

fn resolve_mu_with(source: &str, group: &Arc<FiniteGroup>, seed: u64, validate: bool) -> Result<MuSpec, InputError> {
    match source {
        "auto:chain" => Ok(MuSpec::Strategy(MuStrategy::Chain)),
        "auto:class" => Ok(MuSpec::Strategy(MuStrategy::Class)),
        "auto:random" => Ok(MuSpec::Strategy(MuStrategy::Random(seed))),
        _ => match source.strip_prefix("file:") {
            Some(path) => {
                let mu = load_mu(path, group)?;
                if validate {
                    check_mu(&mu, Hypotheses::ALL)?;
                }
                Ok(MuSpec::Fixed { label: format!("file:{path}"), grades: mu.grades().to_vec() })
            }
            None => Err(InputError(format!("mu source {source:?} must be auto:chain, auto:class, auto:random or file:<path>"))),
        },
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { EXIT_OK } else { EXIT_INVALID };
        }
    };
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a, out),
        Command::GenMu(a) => cmd_gen_mu(a, out),
        Command::Inn(a) => cmd_inn(a, out),
    };
    match result {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    }
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, InputError> {
    let groups: Vec<Arc<FiniteGroup>> = match &a.group {
        Some(source) => vec![Arc::new(resolve_group(source)?)],
        None => DEFAULT_GROUPS.iter().map(|t| Arc::new(builtin_group(t).expect("builtin"))).collect(),
    };
    let ablate = a.ablate.as_deref().map(parse_ablation).transpose()?.flatten();
    let mus = match (&a.mu, ablate) {
        (Some(source), None) => {
            let group = groups.first().ok_or_else(|| InputError("no group".into()))?;
            if groups.len() > 1 && source.starts_with("file:") {
                return Err(InputError("a mu file needs a single --group".into()));
            }
            vec![resolve_mu_with(source, group, a.seed, !a.allow_invalid_mu)?]
        }
        _ => vec![MuSpec::Strategy(MuStrategy::Chain), MuSpec::Strategy(MuStrategy::Class)],
    };
    let mut campaign = Campaign::new(groups, mus).with_seed(a.seed).with_suite(a.suite.parse::<SuiteFilter>()?);
    campaign.timings = a.timings;
    let results = match ablate {
        Some(x) => ablation(&campaign, x.token())?,
        None => run_campaign(&campaign)?,
    };
    let report = Report::new(&campaign, ablate, results);
    let text = match a.format {
        Format::Json => report.to_json_string(),
        Format::Text => report.to_text(),
    };
    out.write_all(text.as_bytes())?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

pub fn cmd_gen_mu(a: &GenMuArgs, out: &mut dyn Write) -> Result<i32, InputError> {
    let group = Arc::new(resolve_group(&a.group)?);
    let strategy = match a.strategy {
        StrategyArg::Chain => MuStrategy::Chain,
        StrategyArg::Class => MuStrategy::Class,
        StrategyArg::Random => MuStrategy::Random(a.seed),
    };
    let text = mu_to_json(&strategy.generate(&group));
    match &a.out {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_inn(a: &InnArgs, out: &mut dyn Write) -> Result<i32, InputError> {
    let group = Arc::new(resolve_group(&a.group)?);
    let mu: Arc<FuzzySubset> = Arc::new(match resolve_mu(&a.mu, &group, a.seed)? {
        MuSpec::Strategy(s) => s.generate(&group),
        MuSpec::Fixed { grades, .. } => FuzzySubset::new(group.clone(), grades)?,
    });
    let inn = build_inn_group(&mu)?;
    let report = inn.report();
    let text = match a.format {
        Format::Json => to_sorted_json(&report),
        Format::Text => {
            let mut s = format!("group: {}\nclasses: {}\n", group.name(), report.classes.len());
            for (i, c) in report.classes.iter().enumerate() {
                s.push_str(&format!("  class {i}: labels {c:?}\n"));
            }
            s.push_str("table:\n");
            for row in &report.table {
                let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                s.push_str(&format!("  {}\n", cells.join(" ")));
            }
            s.push_str(&format!("isomorphic to G/Z(G): {}\n", report.iso_with_quotient));
            s
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(if report.iso_with_quotient { EXIT_OK } else { EXIT_FAILED })
}

//! The `radical-lab` command line.
//!
//! Exit codes: 0 pass (or search hit), 1 mathematical failure (or no search
//! hit), 2 configuration or usage error, 3 size guard or search budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::catalog::Catalog;
use crate::config::{CatalogConfig, SearchConfig, StructureConfig};
use crate::error::{Error, Result};
use crate::radicals::ModuleAnalysis;
use crate::report::{render_analysis, render_search, render_suite, AnalysisBody, Document, SearchBody, VerificationBody};
use crate::search::{search_counterexample, Predicate, SearchStatus};
use crate::suites::{run_suite, suite_names, SuiteContext, SUITES};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "radical-lab", version, about = "Radicals and radical formulas of finite rings and modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Radicals, class flags and ring properties of one module.
    Analyze {
        config: PathBuf,
        /// Also write the report as JSON to this file.
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// Run a theorem suite (or `all`) over the default or a custom catalog.
    Verify {
        suite: String,
        #[arg(long, value_name = "CONFIG")]
        catalog: Option<PathBuf>,
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// Find the first catalog module satisfying a flag predicate.
    Search {
        config: PathBuf,
        /// Maximum number of candidates examined; overrides the config.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// List the theorem suites.
    ListSuites,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeGuardExceeded { .. } => EXIT_BUDGET,
        Error::InvariantBreach(_) | Error::CharacterizationMismatch { .. } => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

/// Runs the command line with `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_PASS
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_json(path: Option<&Path>, text: &str) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Analyze { config, json } => {
            let cfg = StructureConfig::from_json(&read(&config)?)?;
            let (_, module) = cfg.build()?;
            let body = AnalysisBody::new(&ModuleAnalysis::new(&module)?)?;
            write!(out, "{}", render_analysis(&body))?;
            write_json(json.as_deref(), &Document::new(body).to_json())?;
            Ok(EXIT_PASS)
        }
        Command::Verify { suite, catalog, json } => {
            let names: Vec<&str> = if suite == "all" {
                suite_names().collect()
            } else {
                if !SUITES.iter().any(|s| s.name == suite) {
                    return Err(Error::UnknownSuite(suite));
                }
                vec![suite.as_str()]
            };
            let catalog = match catalog {
                Some(p) => Catalog::from_spec(&CatalogConfig::from_json(&read(&p)?)?.generator)?,
                None => Catalog::default_catalog()?,
            };
            let ctx = SuiteContext::new(catalog)?;
            let mut reports = Vec::new();
            for name in names {
                let r = run_suite(name, &ctx)?;
                write!(out, "{}", render_suite(&r))?;
                reports.push(r);
            }
            let body = VerificationBody::new(&ctx.catalog, reports);
            let passed = body.passed;
            write_json(json.as_deref(), &Document::new(body).to_json())?;
            Ok(if passed { EXIT_PASS } else { EXIT_FAILURE })
        }
        Command::Search { config, budget, json } => {
            let cfg = SearchConfig::from_json(&read(&config)?)?;
            let predicate = Predicate::parse(&cfg.predicate)?;
            let outcome = search_counterexample(&predicate, &cfg.generator, budget.or(cfg.budget))?;
            let code = match outcome.status {
                SearchStatus::Found => EXIT_PASS,
                SearchStatus::NotFound => EXIT_FAILURE,
                SearchStatus::BudgetExhausted => EXIT_BUDGET,
            };
            let body = SearchBody::from(outcome);
            write!(out, "{}", render_search(&body))?;
            write_json(json.as_deref(), &Document::new(body).to_json())?;
            Ok(code)
        }
        Command::ListSuites => {
            for s in &SUITES {
                writeln!(out, "{:<20} {}", s.name, s.description)?;
            }
            Ok(EXIT_PASS)
        }
    }
}

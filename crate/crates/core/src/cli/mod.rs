//! Command-line front end: read a fan document, run one analysis, print a
//! report as `key: value` lines or as JSON.

mod document;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use document::{parse_fan, FanDocument};
pub use report::{
    DecompositionDoc, DerivationDoc, FanReportDoc, GaActionsDoc, ReportDocument, RootListing,
    SemigroupDoc, VerdictDoc,
};

use crate::derivations::build_ga_actions;
use crate::error::{Error, Result};
use crate::semigroup::fan_coordinate_semigroup;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MATH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "torikit",
    version,
    about = "Exact computations on toric varieties given by fans"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smoothness, completeness, class group, Euler characteristic, torus
    /// factor and the quasi-affineness verdict.
    Analyze(FanArgs),
    /// Generators of the coordinate ring of the variety.
    HilbertBasis(FanArgs),
    /// Roots of the extremal rays of the support cone within a box.
    Roots {
        #[command(flatten)]
        fan: FanArgs,
        /// Index of a ray in the document; defaults to every extremal ray.
        #[arg(long)]
        ray: Option<usize>,
        /// Half-width of the search box.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
        radius: i64,
    },
    /// Homogeneous Ga-actions with independent characters, after splitting
    /// off any torus factor.
    GaActions(FanArgs),
    /// Split the fan as a fan in the span of its rays times a torus.
    Decompose(FanArgs),
}

#[derive(Debug, Args)]
pub struct FanArgs {
    /// Path to a fan document (JSON).
    pub fanfile: PathBuf,
    /// Print JSON instead of `key: value` lines.
    #[arg(long)]
    pub json: bool,
}

impl Command {
    fn fan_args(&self) -> &FanArgs {
        match self {
            Command::Analyze(a)
            | Command::HilbertBasis(a)
            | Command::GaActions(a)
            | Command::Decompose(a) => a,
            Command::Roots { fan, .. } => fan,
        }
    }
}

/// Runs one command on an already-parsed fan document.
pub fn execute(command: &Command, doc: &FanDocument) -> Result<ReportDocument> {
    let fan = doc.to_fan()?;
    let out = match command {
        Command::Analyze(_) => ReportDocument {
            report: Some(report::analyze(&fan)?),
            ..ReportDocument::new("analyze", doc)
        },
        Command::HilbertBasis(_) => ReportDocument {
            hilbert_basis: Some(report::semigroup_doc(&fan_coordinate_semigroup(&fan))?),
            ..ReportDocument::new("hilbert-basis", doc)
        },
        Command::Roots { ray, radius, .. } => {
            let s = fan_coordinate_semigroup(&fan);
            ReportDocument {
                roots: Some(report::root_listings(doc, &s, *ray, *radius)?),
                ..ReportDocument::new("roots", doc)
            }
        }
        Command::GaActions(_) => {
            let split = fan.split_torus_factor();
            let package = build_ga_actions(&split.reduced)?;
            ReportDocument {
                ga_actions: Some(report::ga_actions_doc(&split, &package)?),
                ..ReportDocument::new("ga-actions", doc)
            }
        }
        Command::Decompose(_) => {
            let split = fan.split_torus_factor();
            ReportDocument {
                decomposition: Some(report::decomposition_doc(&split, doc.name.clone())?),
                ..ReportDocument::new("decompose", doc)
            }
        }
    };
    Ok(out)
}

/// Exit status for an error: 2 for unreadable or invalid input, 3 when the
/// input is well formed but a mathematical precondition fails.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_MATH
    }
}

fn run_parsed(cli: &Cli) -> Result<(ReportDocument, bool)> {
    let args = cli.command.fan_args();
    let text = std::fs::read_to_string(&args.fanfile)
        .map_err(|e| Error::Parse(format!("{}: {e}", args.fanfile.display())))?;
    let doc = parse_fan(&text)?;
    Ok((execute(&cli.command, &doc)?, args.json))
}

/// Entry point shared by the binary and the tests; returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are successes; usage errors are input errors.
            if e.exit_code() == 0 {
                let _ = write!(stdout, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(stderr, "{}", e.render());
            return EXIT_INPUT;
        }
    };
    match run_parsed(&cli) {
        Ok((report, json)) => {
            if let Some(listings) = &report.roots {
                for w in listings.iter().filter_map(|l| l.warning.as_ref()) {
                    let _ = writeln!(stderr, "warning: {w}");
                }
            }
            let text = if json {
                report.to_json()
            } else {
                report.to_human()
            };
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

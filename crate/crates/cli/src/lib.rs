//! Command-line verifier for Lie color algebras, omni-Lie color algebras and
//! Lie color 2-algebras.
//!
//! Inputs are JSON algebra files (see [`format`]); every command emits a
//! [`report::CliReport`] and exits with 0 (all checks pass), 1 (a check
//! failed) or 2 (bad input or usage).

pub mod commands;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod report;
pub mod suite;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use colorlie::linf2::{CocycleForm, HForm};

pub use error::CliError;
pub use report::CliReport;

#[derive(Debug, Parser)]
#[command(name = "colorlie", version, about = "Exact checks for Lie color algebras and their 2-term generalizations")]
pub struct Cli {
    /// Report rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomized suites; echoed in the report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest accepted dimension of any declared space.
    #[arg(long, global = true, default_value_t = 16)]
    pub max_dim: usize,
    /// Form of 2-term axiom (h).
    #[arg(long, global = true, value_enum, default_value_t = HFormArg::Corrected)]
    pub h_form: HFormArg,
    /// Sign pattern of 2-term axiom (i).
    #[arg(long, global = true, value_enum, default_value_t = IFormArg::Coherent)]
    pub i_form: IFormArg,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HFormArg {
    Corrected,
    AsPrinted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IFormArg {
    Coherent,
    Printed,
}

impl From<HFormArg> for HForm {
    fn from(h: HFormArg) -> Self {
        match h {
            HFormArg::Corrected => HForm::Corrected,
            HFormArg::AsPrinted => HForm::AsPrinted,
        }
    }
}

impl From<IFormArg> for CocycleForm {
    fn from(i: IFormArg) -> Self {
        match i {
            IFormArg::Coherent => CocycleForm::Coherent,
            IFormArg::Printed => CocycleForm::Printed,
        }
    }
}

/// Where the algebra file comes from.
#[derive(Clone, Debug, Default, Args)]
pub struct Input {
    /// Algebra file; `-` reads standard input.
    pub file: Option<PathBuf>,
    /// Use a built-in fixture instead of a file.
    #[arg(long, conflicts_with = "file")]
    pub fixture: Option<String>,
    /// Named entry of the file's `subspaces` section.
    #[arg(long)]
    pub subspace: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Identities of a single graded algebra.
    #[command(subcommand)]
    Check(CheckCmd),
    /// The omni-Lie color algebra of the file's `space`.
    #[command(subcommand)]
    Omni(OmniCmd),
    /// 2-term color L∞-algebras.
    #[command(subcommand)]
    L2(L2Cmd),
    /// Lie color 2-algebras.
    #[command(subcommand)]
    Lc2(Lc2Cmd),
    /// Print a built-in algebra file.
    Fixtures { name: String },
    /// Randomized identities over every fixture.
    Suite {
        /// Random samples per identity and fixture.
        #[arg(long, default_value_t = 24)]
        trials: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    Bicharacter(Input),
    #[command(alias = "lie-color")]
    Lie(Input),
    Leibniz(Input),
    Representation(Input),
    Quadratic(Input),
}

#[derive(Debug, Subcommand)]
pub enum OmniCmd {
    #[command(alias = "check-leibniz")]
    Leibniz(Input),
    #[command(alias = "verify-homotopy")]
    Homotopy(Input),
    /// Dirac test for `--subspace`, or for the graph of the file's bracket.
    Dirac(Input),
    DiracFromLie(Input),
    LieFromDirac(Input),
    Derivations(Input),
}

#[derive(Debug, Subcommand)]
pub enum L2Cmd {
    Check(Input),
    FromOmni(Input),
    String(Input),
    Skeletal(Input),
    StrictToCrossed(Input),
    CrossedToStrict(Input),
}

#[derive(Debug, Subcommand)]
pub enum Lc2Cmd {
    #[command(alias = "check-jacobiator")]
    Jacobiator(Input),
    Roundtrip(Input),
}

/// What to print and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    stdout: e.to_string(),
                    exit_code: 0,
                },
                ErrorKind::InvalidSubcommand | ErrorKind::MissingSubcommand
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let mut r = CliReport::new("", b"");
                    r.fail_with(&CliError::UnknownCommand(first_line(&e.to_string())));
                    Outcome {
                        stdout: r.to_json(),
                        exit_code: 2,
                    }
                }
                _ => {
                    let mut r = CliReport::new("", b"");
                    r.fail_with(&CliError::Usage(first_line(&e.to_string())));
                    Outcome {
                        stdout: r.to_json(),
                        exit_code: 2,
                    }
                }
            };
        }
    };
    execute(&cli)
}

fn first_line(s: &str) -> String {
    let line = s.lines().next().unwrap_or_default();
    line.strip_prefix("error: ").unwrap_or(line).to_string()
}

pub fn execute(cli: &Cli) -> Outcome {
    if let Command::Fixtures { name } = &cli.command {
        return match fixtures::fixture(name) {
            Ok(f) => Outcome {
                stdout: f.to_json(),
                exit_code: 0,
            },
            Err(e) => {
                let mut r = CliReport::new(format!("fixtures {name}"), b"");
                r.fail_with(&e);
                render(cli, r)
            }
        };
    }
    let start = Instant::now();
    let mut report = commands::dispatch(cli);
    report.elapsed = Some(start.elapsed());
    render(cli, report)
}

fn render(cli: &Cli, report: CliReport) -> Outcome {
    let stdout = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Outcome {
        stdout,
        exit_code: report.exit_code(),
    }
}

//! Command-line front end for `g2chev`.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commutators::{all_formulas, formula, CommutatorFormula};
use crate::constants::{solve, Seeds};
use crate::emit;
use crate::golden::listed_pairs;
use crate::report::run_verification;
use crate::rootsys::Root;
use crate::signs::SignAssignment;

/// Exit status for a failed verification or an internal error.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for an invalid command line.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "g2chev",
    version,
    about = "Structure constants and commutator formulas for G2"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the structure constant table N_{r,s}.
    Table(CommonArgs),
    /// Print the commutator formulas [x_s(u), x_r(t)].
    Formulas {
        #[command(flatten)]
        common: CommonArgs,
        /// Only the formula for LEFT,RIGHT, e.g. `b,a`.
        #[arg(long, value_name = "LEFT,RIGHT")]
        pair: Option<String>,
        /// Only the 41 pairs listed in the reference tables.
        #[arg(long)]
        listed: bool,
    },
    /// Check relations, the Jacobi identity and every formula in the adjoint representation.
    Verify(CommonArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Four signs for ε1..ε4 (e.g. `+ - + +`), `symbolic`, or `all`.
    #[arg(long, num_args = 1..=4, value_name = "SIGNS")]
    pub signs: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Latex,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Signs {
    Symbolic,
    Fixed(SignAssignment),
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Table,
    Formulas,
    Verify,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    Every,
    Listed,
    Pair(Root, Root),
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub command: CommandKind,
    pub signs: Signs,
    pub format: Format,
    pub selection: Selection,
    pub output: Option<PathBuf>,
}

/// What a run produced: the exit status and the text to emit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub text: String,
}

fn parse_signs(tokens: &[String], command: CommandKind) -> Result<Signs, String> {
    match tokens {
        [] if command == CommandKind::Verify => Ok(Signs::All),
        [] => Ok(Signs::Symbolic),
        [word] if word == "symbolic" => Ok(Signs::Symbolic),
        [word] if word == "all" => Ok(Signs::All),
        _ => tokens.join(" ").parse().map(Signs::Fixed).map_err(|_| {
            format!(
                "--signs expects four of +/-, `symbolic` or `all`, got `{}`",
                tokens.join(" ")
            )
        }),
    }
}

fn parse_pair(text: &str) -> Result<(Root, Root), String> {
    let (left, right) = text
        .split_once(',')
        .ok_or_else(|| format!("--pair expects LEFT,RIGHT, got `{text}`"))?;
    let root = |s: &str| s.trim().parse::<Root>().map_err(|e| e.to_string());
    Ok((root(left)?, root(right)?))
}

impl CliConfig {
    /// Checks flag combinations.
    pub fn from_cli(cli: Cli) -> Result<CliConfig, String> {
        let (command, common, selection) = match cli.command {
            Command::Table(common) => (CommandKind::Table, common, Selection::Every),
            Command::Verify(common) => (CommandKind::Verify, common, Selection::Every),
            Command::Formulas {
                common,
                pair,
                listed,
            } => {
                let selection = match (pair, listed) {
                    (Some(_), true) => {
                        return Err("--pair and --listed are mutually exclusive".into())
                    }
                    (Some(pair), false) => {
                        let (left, right) = parse_pair(&pair)?;
                        Selection::Pair(left, right)
                    }
                    (None, true) => Selection::Listed,
                    (None, false) => Selection::Every,
                };
                (CommandKind::Formulas, common, selection)
            }
        };
        let signs = parse_signs(&common.signs, command)?;
        if signs == Signs::All && command != CommandKind::Verify {
            return Err("--signs all is only valid with verify".into());
        }
        if signs == Signs::Symbolic && command == CommandKind::Verify {
            return Err("verify needs concrete signs: four of +/- or `all`".into());
        }
        if common.format == Format::Csv && command != CommandKind::Table {
            return Err("--format csv is only valid with table".into());
        }
        Ok(CliConfig {
            command,
            signs,
            format: common.format,
            selection,
            output: common.output,
        })
    }
}

fn select_formulas(all: Vec<CommutatorFormula>, selection: &Selection) -> Vec<CommutatorFormula> {
    match selection {
        Selection::Every => all,
        Selection::Listed => listed_pairs()
            .into_iter()
            .filter_map(|(l, r)| all.iter().find(|f| f.left == l && f.right == r).cloned())
            .collect(),
        Selection::Pair(..) => unreachable!("single pairs are generated directly"),
    }
}

/// Runs a validated command.
pub fn run(config: &CliConfig) -> crate::Result<Outcome> {
    let table = solve(&Seeds::symbolic())?;
    let sigma = match config.signs {
        Signs::Fixed(s) => Some(s),
        _ => None,
    };
    let ok = |text| Outcome { status: 0, text };
    match config.command {
        CommandKind::Table => Ok(ok(match config.format {
            Format::Ascii => emit::table_ascii(&table, sigma),
            Format::Latex => emit::table_latex(&table, sigma),
            Format::Json => emit::table_json(&table, sigma),
            Format::Csv => emit::table_csv(&table, sigma),
        })),
        CommandKind::Formulas => {
            let formulas = match &config.selection {
                Selection::Pair(left, right) => vec![formula(&table, *left, *right)?],
                other => select_formulas(all_formulas(&table)?, other),
            };
            Ok(ok(match config.format {
                Format::Latex => emit::formulas_latex(&formulas, sigma),
                Format::Json => emit::formulas_json(&formulas, sigma),
                _ => emit::formulas_ascii(&formulas, sigma),
            }))
        }
        CommandKind::Verify => {
            let sigmas: Vec<SignAssignment> = match config.signs {
                Signs::Fixed(s) => vec![s],
                _ => SignAssignment::all().collect(),
            };
            let report = run_verification(&table, &sigmas)?;
            let text = match config.format {
                Format::Latex => emit::report_latex(&report),
                Format::Json => emit::report_json(&report),
                _ => emit::report_ascii(&report),
            };
            Ok(Outcome {
                status: if report.passed() { 0 } else { EXIT_FAILURE },
                text,
            })
        }
    }
}

/// Splits a compact sign word such as `-+++` following `--signs` into single
/// tokens, which clap would otherwise read as short flags.
fn split_sign_words(args: Vec<std::ffi::OsString>) -> Vec<std::ffi::OsString> {
    let is_sign_word =
        |s: &str| s.chars().count() > 1 && s.chars().all(|c| matches!(c, '+' | '-' | '−'));
    let mut out = Vec::with_capacity(args.len());
    let mut after_signs = false;
    for arg in args {
        match arg.to_str() {
            Some(word) if after_signs && is_sign_word(word) => {
                out.extend(word.chars().map(|c| c.to_string().into()));
            }
            _ => out.push(arg.clone()),
        }
        after_signs = arg == "--signs";
    }
    out
}

/// Parses `args`, runs, and writes the output. Returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = split_sign_words(args.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let config = match CliConfig::from_cli(cli) {
        Ok(config) => config,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let outcome = match run(&config) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return if matches!(
                e,
                crate::Error::OppositeRoots(..) | crate::Error::ProportionalRoots(..)
            ) {
                EXIT_USAGE
            } else {
                EXIT_FAILURE
            };
        }
    };
    let written = match &config.output {
        Some(path) => std::fs::write(path, &outcome.text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_FAILURE;
    }
    outcome.status
}

//! The `ultratree` command line.
//!
//! Exit codes: 0 success (or a positive answer), 1 usage / input / I/O error,
//! 2 a negative answer (not star-generated, not isometric, no counterexample,
//! verification failure).

use std::ffi::OsString;
use std::fmt::Display;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;
use ultratree_core::io::{self as fio, IoError};
use ultratree_core::verify::{verify, TheoremId, DEFAULT_CASE_BUDGET};
use ultratree_core::{
    build_ultrametric, check_isometric, counterexample_labeling, realize_as_star, us_witness, LabelingError,
    MetricError, Rational, VerifyConfig,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_NEGATIVE: u8 = 2;

/// Budget used by `verify --large`.
const LARGE_BUDGET: u64 = 100_000_000;

#[derive(Parser, Debug)]
#[command(name = "ultratree", version, about = "Ultrametric spaces generated by vertex-labeled trees")]
struct Cli {
    /// Also write a machine-readable result to this file.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the distance matrix of a labeled tree as CSV.
    Distance { file: PathBuf },
    /// Print a witness point of a star-generated space, or NOT-US.
    CheckUs { file: PathBuf },
    /// Print the labeled star generating a space.
    Realize { file: PathBuf },
    /// Print Star, DoubleStar or Other for a tree.
    Classify { file: PathBuf },
    /// Print whether two spaces are isometric.
    Isometric { a: PathBuf, b: PathBuf },
    /// Print the labeling of a tree whose space is not star-generated.
    Counterexample { file: PathBuf },
    /// Exhaustively check a theorem over all small labeled trees.
    Verify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        #[arg(long = "max-order", default_value_t = 6)]
        max_order: usize,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        values: Vec<Rational>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Maximum number of (tree, labeling) cases.
        #[arg(long, default_value_t = DEFAULT_CASE_BUDGET)]
        budget: u64,
        /// Raise the budget for order-7 runs (minutes-scale).
        #[arg(long)]
        large: bool,
    },
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: ultratree_core::VerifyError| e.to_string())
}

/// A failure with a stable code and an exit status.
struct Failure {
    code: &'static str,
    message: String,
    exit: u8,
}

impl Failure {
    fn error(code: &'static str, message: impl Display) -> Self {
        Failure {
            code,
            message: message.to_string(),
            exit: EXIT_ERROR,
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::error(e.code(), e)
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::error("E_IO", format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn write_json(path: &Option<PathBuf>, value: &serde_json::Value) -> Result<(), Failure> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(value).expect("json value serializes");
        std::fs::write(path, text + "\n").map_err(|e| Failure::error("E_IO", format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn emit(out: &mut dyn Write, text: impl Display) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::error("E_IO", e))
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, Failure> {
    match cli.command {
        Command::Distance { file } => {
            let lt = fio::parse_labeled_tree(&read_input(&file)?)?;
            let space = build_ultrametric(&lt).map_err(|e: LabelingError| Failure::error(e.code(), e))?;
            write!(out, "{}", fio::distance_csv(&space)).map_err(|e| Failure::error("E_IO", e))?;
            write_json(&cli.json, &serde_json::to_value(fio::SpaceJson::from(&space)).unwrap())?;
            Ok(EXIT_OK)
        }
        Command::CheckUs { file } => {
            let space = fio::parse_space(&read_input(&file)?)?;
            let witness = us_witness(&space).map(|i| space.point(i).to_owned());
            emit(out, witness.as_deref().unwrap_or("NOT-US"))?;
            write_json(&cli.json, &json!({ "us": witness.is_some(), "witness": witness }))?;
            Ok(if witness.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Realize { file } => {
            let space = fio::parse_space(&read_input(&file)?)?;
            match realize_as_star(&space) {
                Ok(lt) => {
                    emit(out, fio::labeled_tree_to_json(&lt))?;
                    write_json(&cli.json, &serde_json::to_value(fio::LabeledTreeJson::from(&lt)).unwrap())?;
                    Ok(EXIT_OK)
                }
                Err(e @ MetricError::NotUs) => {
                    emit(err, format!("NOT-US: {e}"))?;
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err(Failure::error(e.code(), e)),
            }
        }
        Command::Classify { file } => {
            let tree = fio::parse_tree(&read_input(&file)?)?;
            let class = tree.classify();
            emit(out, class.kind)?;
            let centers: Vec<&str> = class.centers.iter().map(|&v| tree.name(v)).collect();
            write_json(
                &cli.json,
                &json!({
                    "class": class.kind.as_str(),
                    "centers": centers,
                    "longest_path": tree.longest_path_length(),
                }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Isometric { a, b } => {
            let a = fio::parse_space(&read_input(&a)?)?;
            let b = fio::parse_space(&read_input(&b)?)?;
            let iso = check_isometric(&a, &b);
            emit(out, iso)?;
            write_json(&cli.json, &json!({ "isometric": iso }))?;
            Ok(if iso { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Counterexample { file } => {
            let tree = fio::parse_tree(&read_input(&file)?)?;
            match counterexample_labeling(&tree) {
                Ok(lt) => {
                    emit(out, fio::labeled_tree_to_json(&lt))?;
                    write_json(&cli.json, &serde_json::to_value(fio::LabeledTreeJson::from(&lt)).unwrap())?;
                    Ok(EXIT_OK)
                }
                Err(e @ LabelingError::NoLongPath { .. }) => {
                    emit(err, format!("no counterexample: {e}"))?;
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err(Failure::error(e.code(), e)),
            }
        }
        Command::Verify {
            theorem,
            max_order,
            values,
            jobs,
            budget,
            large,
        } => {
            let budget = if large {
                emit(err, format!("warning: --large raises the case budget to {LARGE_BUDGET}; order-7 runs take minutes"))?;
                budget.max(LARGE_BUDGET)
            } else {
                budget
            };
            let config = VerifyConfig {
                n_max: max_order,
                values,
                jobs,
                budget,
            };
            let report = verify(theorem, &config).map_err(|e| Failure::error(e.code(), e))?;
            write!(out, "{}", report.summary()).map_err(|e| Failure::error("E_IO", e))?;
            write_json(&cli.json, &serde_json::to_value(&report).unwrap())?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let _ = write!(err, "error[E_USAGE]: {}", text.strip_prefix("error: ").unwrap_or(&text));
            return EXIT_ERROR;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error[{}]: {}", f.code, f.message);
            f.exit
        }
    }
}

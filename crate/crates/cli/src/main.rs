//! `khas-mpi`: dual-cutoff multidimensional poverty measurement over
//! household survey CSVs. Every measuring subcommand writes its outputs
//! plus a run manifest (input hashes, scheme hash, cutoff, policy flags)
//! into the output directory.
//!
//! Exit codes: 0 success, 1 computation contract violated (empty poor
//! set, broken partition, scheme/matrix mismatch, oracle size cap),
//! 2 input or usage error. Failures print a JSON object
//! `{code, message, context}` to stderr.

mod check_paper;
mod commands;
mod manifest;

use clap::{Args, Parser, Subcommand};
use commands::{parse_fraction, Format};
use khas_mpi_core::{Error, Rational};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "khas-mpi", version, about = "Dual-cutoff multidimensional poverty measurement")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DataArgs {
    /// Household-level CSV input.
    #[arg(long)]
    households: PathBuf,
    /// Person-level CSV input.
    #[arg(long)]
    persons: PathBuf,
    /// Listwise deletion scope: "all" drops a household on any missing
    /// field, "scheme" only on fields the scheme(s) in use consume.
    #[arg(long, default_value = "all", value_parser = ["all", "scheme"])]
    missing_policy: String,
}

#[derive(Args)]
struct SchemeArgs {
    /// Builtin scheme name (khas_household, khas_individual) or path to a
    /// scheme JSON file.
    #[arg(long, default_value = "khas_household")]
    scheme: String,
    /// Drop a dimension and renormalize the remaining weights. Repeatable.
    #[arg(long = "exclude-dimension")]
    exclude_dimension: Vec<String>,
    /// Drop a single indicator and renormalize. Repeatable.
    #[arg(long = "exclude-indicator")]
    exclude_indicator: Vec<String>,
    /// Poverty cutoff as a fraction N/D; defaults to the scheme's own k.
    #[arg(long, value_parser = parse_fraction)]
    k: Option<Rational>,
}

#[derive(Args)]
struct OutArgs {
    /// Output directory, created if absent.
    #[arg(long, env = "KHAS_MPI_OUT")]
    out: PathBuf,
    #[arg(long, default_value = "both", value_parser = ["csv", "json", "both"])]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Compute H, A, M0 at the poverty cutoff.
    Compute {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        scheme: SchemeArgs,
        #[command(flatten)]
        out: OutArgs,
        /// Also write the per-unit deprivation matrix as units.csv.
        #[arg(long)]
        per_unit: bool,
    },
    /// Decompose M0 by indicator and dimension, optionally per subgroup.
    Decompose {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        scheme: SchemeArgs,
        #[command(flatten)]
        out: OutArgs,
        /// Subgrouping: all, sex, head_sex, household_poor, or
        /// marital_status (deserted/other are excluded with a footnote).
        #[arg(long, default_value = "all",
              value_parser = ["all", "sex", "head_sex", "household_poor", "marital_status"])]
        group_by: String,
        /// Household-level scheme used to mark each person's household as
        /// poor or not when grouping by household_poor.
        #[arg(long, default_value = "khas_household")]
        household_scheme: String,
    },
    /// Cross-tabulate individual against household poverty status.
    Crosstab {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        out: OutArgs,
        #[arg(long, default_value = "khas_individual")]
        individual_scheme: String,
        #[arg(long, default_value = "khas_household")]
        household_scheme: String,
        /// Poverty cutoff as a fraction N/D applied to both schemes.
        #[arg(long, value_parser = parse_fraction)]
        k: Option<Rational>,
        /// Cell splitting: none, sex, head_sex, or both.
        #[arg(long, default_value = "none", value_parser = ["none", "sex", "head_sex", "both"])]
        by: String,
    },
    /// H, A, M0 across a range of poverty cutoffs (dominance sweep).
    Sweep {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        scheme: SchemeArgs,
        #[command(flatten)]
        out: OutArgs,
        /// Comma-separated ascending cutoffs, e.g. "1/10,2/10,3/10";
        /// defaults to 1/10 through 10/10.
        #[arg(long)]
        cutoffs: Option<String>,
        /// Per-group curves: none, sex, or head_sex.
        #[arg(long, default_value = "none", value_parser = ["none", "sex", "head_sex"])]
        group_by: String,
    },
    /// Generate a seeded synthetic population from a JSON config.
    Generate {
        /// Generator config JSON.
        #[arg(long)]
        config: PathBuf,
        #[arg(long, env = "KHAS_MPI_OUT")]
        out: PathBuf,
    },
    /// Ingest and report row counts, drops, and defaults without measuring.
    Validate {
        /// Household-level CSV input.
        #[arg(long)]
        households: PathBuf,
        /// Person-level CSV input.
        #[arg(long)]
        persons: PathBuf,
        /// Restrict the missing-field check to this scheme's fields.
        #[arg(long)]
        scheme: Option<String>,
    },
    /// Check internal consistency of the published estimates this tool
    /// reproduces.
    CheckPaper,
}

fn error_code(e: &Error) -> &'static str {
    match e {
        Error::NotFound(_) => "not_found",
        Error::SchemeInvalid(_) => "scheme_invalid",
        Error::Ingest { .. } => "ingest",
        Error::Integrity(_) => "integrity",
        Error::SchemeMismatch(_) => "scheme_mismatch",
        Error::EmptyPoorSet => "empty_poor_set",
        Error::Partition(_) => "partition",
        Error::BadCutoffs(_) => "bad_cutoffs",
        Error::TooLarge { .. } => "too_large",
        Error::Config(_) => "config",
        Error::Io(_) => "io",
        Error::Csv(_) => "csv",
        Error::Json(_) => "json",
    }
}

/// 1 = a computation contract was violated on valid input; 2 = the input
/// or invocation itself was unusable.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SchemeMismatch(_) | Error::EmptyPoorSet | Error::Partition(_) | Error::TooLarge { .. } => 1,
        _ => 2,
    }
}

fn error_context(e: &Error) -> serde_json::Value {
    match e {
        Error::Ingest { row, column, .. } => json!({ "row": row, "column": column }),
        Error::TooLarge { n, cap } => json!({ "n": n, "cap": cap }),
        Error::SchemeInvalid(violations) => json!({
            "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>()
        }),
        _ => json!({}),
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Compute { data, scheme, out, per_unit } => {
            commands::cmd_compute(&commands::ComputeOptions {
                households: &data.households,
                persons: &data.persons,
                scheme: &scheme.scheme,
                exclude_dimensions: &scheme.exclude_dimension,
                exclude_indicators: &scheme.exclude_indicator,
                k: scheme.k,
                missing_policy: &data.missing_policy,
                per_unit,
                out: &out.out,
                format: Format::from_flag(&out.format),
            })?;
            Ok(0)
        }
        Command::Decompose {
            data,
            scheme,
            out,
            group_by,
            household_scheme,
        } => {
            commands::cmd_decompose(&commands::DecomposeOptions {
                households: &data.households,
                persons: &data.persons,
                scheme: &scheme.scheme,
                household_scheme: &household_scheme,
                exclude_dimensions: &scheme.exclude_dimension,
                exclude_indicators: &scheme.exclude_indicator,
                k: scheme.k,
                missing_policy: &data.missing_policy,
                group_by: &group_by,
                out: &out.out,
                format: Format::from_flag(&out.format),
            })?;
            Ok(0)
        }
        Command::Crosstab {
            data,
            out,
            individual_scheme,
            household_scheme,
            k,
            by,
        } => {
            commands::cmd_crosstab(&commands::CrosstabOptions {
                households: &data.households,
                persons: &data.persons,
                individual_scheme: &individual_scheme,
                household_scheme: &household_scheme,
                k,
                missing_policy: &data.missing_policy,
                by: &by,
                out: &out.out,
                format: Format::from_flag(&out.format),
            })?;
            Ok(0)
        }
        Command::Sweep {
            data,
            scheme,
            out,
            cutoffs,
            group_by,
        } => {
            commands::cmd_sweep(&commands::SweepOptions {
                households: &data.households,
                persons: &data.persons,
                scheme: &scheme.scheme,
                exclude_dimensions: &scheme.exclude_dimension,
                exclude_indicators: &scheme.exclude_indicator,
                cutoffs: cutoffs.as_deref(),
                missing_policy: &data.missing_policy,
                group_by: &group_by,
                out: &out.out,
                format: Format::from_flag(&out.format),
            })?;
            Ok(0)
        }
        Command::Generate { config, out } => {
            commands::cmd_generate(&config, &out)?;
            Ok(0)
        }
        Command::Validate {
            households,
            persons,
            scheme,
        } => {
            commands::cmd_validate(&households, &persons, scheme.as_deref())?;
            Ok(0)
        }
        Command::CheckPaper => Ok(if check_paper::run() > 0 { 1 } else { 0 }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let payload = json!({
                "code": error_code(&e),
                "message": e.to_string(),
                "context": error_context(&e),
            });
            eprintln!("{payload}");
            ExitCode::from(exit_code(&e))
        }
    }
}

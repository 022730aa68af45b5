use std::process::ExitCode;

use chowkit::ranklocus::{plan, RankLocusSpec};
use chowkit_cli::render::{plan_json, plan_text, rank_locus_info, rank_locus_text, report_text};
use chowkit_cli::report::{self, Status};
use chowkit_cli::{intersect, CliError};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "chowkit",
    version,
    about = "Exact intersection numbers and rank-locus invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Degree of a polynomial in h1..hm on a product of projective spaces.
    Intersect {
        expr: String,
        /// e.g. "P4 x P5"
        #[arg(long, short)]
        ambient: String,
    },
    /// Invariants of a linear section of the double cover of a rank locus.
    Plan {
        r: i64,
        n: i64,
        c: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dimension and degree of the rank-r locus of symmetric n x n matrices.
    RankLocus {
        r: i64,
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run every reproduction check.
    ReproducePaper {
        /// Restrict to one check group.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

const USAGE: u8 = 2;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Intersect { expr, ambient } => match intersect(&expr, &ambient) {
            Ok(v) => {
                println!("{v}");
                ExitCode::SUCCESS
            }
            Err(e @ (CliError::Parse { .. } | CliError::Unbound(_))) => usage(e),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
        Command::Plan { r, n, c, format } => {
            let report = match RankLocusSpec::new(r, n, c).and_then(plan) {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            match format {
                Format::Text => print!("{}", plan_text(&report)),
                Format::Json => println!("{}", plan_json(&report)),
            }
            ExitCode::SUCCESS
        }
        Command::RankLocus { r, n, format } => {
            let info = match rank_locus_info(r, n) {
                Ok(i) => i,
                Err(e @ chowkit::Error::InvalidArgument(_)) => return usage(e),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::FAILURE;
                }
            };
            match format {
                Format::Text => print!("{}", rank_locus_text(&info)),
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&info).expect("serializes")
                    )
                }
            }
            ExitCode::SUCCESS
        }
        Command::ReproducePaper { only, format } => {
            let Some(doc) = report::run(only.as_deref()) else {
                return usage(format!(
                    "unknown group {:?}; groups: {}",
                    only.unwrap_or_default(),
                    report::group_tags().join(", ")
                ));
            };
            match format {
                Format::Text => print!("{}", report_text(&doc)),
                Format::Json => println!("{}", doc.to_json()),
            }
            for c in doc.failures() {
                eprintln!(
                    "check failed: {} (expected {}, computed {})",
                    c.id, c.expected, c.computed
                );
            }
            if doc.overall == Status::Pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

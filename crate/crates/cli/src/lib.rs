//! Front end for the `chowkit` engine: an intersection-number calculator,
//! planner and rank-locus queries, and the reproduction report.

pub mod ambient;
pub mod expr;
pub mod render;
pub mod report;

use std::fmt;

use chowkit::exact::{as_integer, BigInt};
use chowkit::IntersectionRing;

pub use ambient::Ambient;
pub use expr::{parse, Expr, ParseError};

#[derive(Debug)]
pub enum CliError {
    /// A syntax error in `input`.
    Parse {
        input: String,
        error: ParseError,
    },
    Unbound(String),
    Engine(chowkit::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { input, error } => write!(f, "{}", error.annotate(input)),
            CliError::Unbound(msg) => write!(f, "{msg}"),
            CliError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<chowkit::Error> for CliError {
    fn from(e: chowkit::Error) -> Self {
        CliError::Engine(e)
    }
}

/// The degree of `expr` on the product of projective spaces `ambient`.
pub fn intersect(expr: &str, ambient: &str) -> Result<BigInt, CliError> {
    let amb = Ambient::parse(ambient).map_err(|error| CliError::Parse {
        input: ambient.to_string(),
        error,
    })?;
    let tree = parse(expr).map_err(|error| CliError::Parse {
        input: expr.to_string(),
        error,
    })?;
    let ring = amb.ring();
    let value = tree.eval(&ring).map_err(CliError::Unbound)?;
    let degree = ring.integrate(&value);
    as_integer(&degree).ok_or_else(|| {
        CliError::Engine(chowkit::Error::NonIntegral {
            what: expr.to_string(),
            value: degree.to_string(),
        })
    })
}

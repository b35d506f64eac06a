use crate::rational::Rational;
use thiserror::Error;

/// A single validation failure found while checking a measurement scheme.
/// `load_scheme` collects every violation before rejecting.
#[derive(Debug, Clone, PartialEq)]
pub enum SchemeViolation {
    /// Indicator weights do not sum to exactly 1; carries the actual sum.
    WeightSum(Rational),
    /// Evaluator key not registered in the deprivation module.
    UnknownEvaluator(String),
    /// Poverty cutoff outside (0, 1].
    Cutoff(Rational),
    /// A transformation would leave a dimension or scheme empty.
    Degenerate(String),
    /// Non-positive weight, duplicate id, dangling reference, unit mismatch.
    Structural(String),
}

impl std::fmt::Display for SchemeViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SchemeViolation::WeightSum(sum) => write!(f, "weight_sum: weights sum to {sum}, expected 1"),
            SchemeViolation::UnknownEvaluator(key) => write!(f, "unknown_evaluator: {key}"),
            SchemeViolation::Cutoff(k) => write!(f, "cutoff: k = {k} outside (0, 1]"),
            SchemeViolation::Degenerate(what) => write!(f, "degenerate: {what}"),
            SchemeViolation::Structural(what) => write!(f, "structural: {what}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("not found: {0}")]
    NotFound(String),

    #[error("invalid scheme: {}", format_violations(.0))]
    SchemeInvalid(Vec<SchemeViolation>),

    #[error("ingest error at row {row}, column {column}: {message}")]
    Ingest {
        row: u64,
        column: String,
        message: String,
    },

    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("scheme mismatch: {0}")]
    SchemeMismatch(String),

    #[error("no poor units in subset; decomposition undefined")]
    EmptyPoorSet,

    #[error("groups do not partition the unit set: {0}")]
    Partition(String),

    #[error("bad cutoffs: {0}")]
    BadCutoffs(String),

    #[error("input too large for oracle: {n} units exceeds cap {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("generator config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

fn format_violations(violations: &[SchemeViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;

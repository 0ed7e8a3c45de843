use thiserror::Error;

use crate::metrics::{Bundle, TrlStage, WeightKind};

/// Domain errors raised by the metric types and operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("TRL {0} is outside the 1..=9 scale")]
    TrlOutOfRange(i64),

    #[error("matrix cell {bundle}/{stage} must be a finite non-negative cost, got {value}")]
    InvalidCost {
        bundle: Bundle,
        stage: TrlStage,
        value: f64,
    },

    #[error("weight component {index} must be a finite, strictly positive value, got {value}")]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("{kind} weights need {expected} components, got {actual}")]
    WeightLength {
        kind: WeightKind,
        expected: usize,
        actual: usize,
    },

    #[error("weight constraint sum(1/x^2) = 1 violated, residual {residual:e}")]
    WeightConstraint { residual: f64 },

    #[error("expected a {expected} weight vector, got {actual}")]
    WeightKindMismatch {
        expected: WeightKind,
        actual: WeightKind,
    },

    #[error("adopted standards missing from the applicable set: {}", .0.join(", "))]
    AdoptedNotApplicable(Vec<String>),

    #[error("standardization merit factor must lie in [0, 1], got {0}")]
    RhoOutOfRange(f64),

    #[error("{op} undefined for null C-Port Vector")]
    NullVector { op: &'static str },
}

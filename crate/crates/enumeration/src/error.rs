use thiserror::Error;

/// Errors from series arithmetic, fixed-point solving, and the exhaustive
/// censuses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    /// Binary series operations require both operands truncated at the same
    /// order.
    #[error("series order mismatch: left operand has order {left}, right operand has order {right}")]
    OrderMismatch { left: usize, right: usize },
    /// The fixed-point iteration did not stabilize within the guaranteed
    /// bound, so the equation is not contractive (some coefficient of the
    /// image depends on coefficients of the argument at the same or a higher
    /// index).
    #[error("fixed-point iteration did not stabilize at order {order}; the equation is not contractive")]
    NotStabilized { order: usize },
    /// The requested sequence is computed by recurrence only; it has no
    /// single self-referential series equation.
    #[error("the `{name}` sequence has no characteristic series equation")]
    NoSeriesEquation { name: &'static str },
    /// Exhaustive censuses are capped where term enumeration stays tractable.
    #[error("census bound {bound} exceeds the supported ceiling {ceiling} for {unit}-indexed enumeration")]
    CensusBoundExceeded {
        unit: &'static str,
        bound: usize,
        ceiling: usize,
    },
    /// A sequence name outside the supported set.
    #[error("unknown sequence name `{0}` (expected one of: max-deg, min-deg, iso-deg, classes-ht, iso-ht, elements, edges, intervals)")]
    UnknownSequence(String),
}

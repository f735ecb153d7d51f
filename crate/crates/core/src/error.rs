use thiserror::Error;

/// Errors produced by shape construction, parsing, and the decision
/// procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A part is zero or larger than its predecessor. The index is the
    /// 0-based position of the offending part.
    #[error("part at index {index} must be positive and weakly decreasing")]
    NotWeaklyDecreasing { index: usize },

    /// A token in a partition text form did not parse as a positive integer.
    #[error("invalid integer at index {index}")]
    InvalidInteger { index: usize },

    /// The inner partition sticks out of the outer one at the given 1-based row.
    #[error("inner partition exceeds outer partition at row {row}")]
    ContainmentViolation { row: usize },

    /// Outer and inner partitions have the same size: the skew shape has no boxes.
    #[error("skew shape has no boxes")]
    EmptyShape,

    /// A cell set does not form a skew diagram.
    #[error("cell set is not a skew diagram")]
    NotSkew,

    /// The operation is only defined for connected skew shapes.
    #[error("skew shape is disconnected")]
    DisconnectedShape,

    /// Tableau entries do not cover exactly the cells of the shape.
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    /// Fattening parameters produce an invalid or disconnected shape.
    #[error("invalid fattening: {0}")]
    InvalidFattening(String),

    /// A precondition on the decision procedure was violated.
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    /// Two polynomials over different variable counts were compared.
    #[error("polynomials have different variable counts: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    /// An exact integer count exceeded the coefficient type.
    #[error("coefficient overflow")]
    Overflow,
}

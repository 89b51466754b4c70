use thiserror::Error;

/// Errors produced by the invariant pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token at byte {pos}: {msg}")]
    MalformedToken { pos: usize, msg: String },

    #[error("crossing {label} must appear exactly once as O and once as U")]
    LabelCountMismatch { label: u32 },

    #[error("crossing {label} carries conflicting signs")]
    SignConflict { label: u32 },

    #[error("state has length {got}, diagram has {expected} crossings")]
    LengthMismatch { expected: usize, got: usize },

    #[error("diagram is not connected ({blocks} blocks)")]
    DisconnectedDiagram { blocks: usize },

    #[error("diagram is not checkerboard colorable")]
    NotColorable,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("single-cycle smoothing at crossing index {crossing}")]
    SingleCycleFound { crossing: usize },

    #[error(
        "differential lowers filtration: column level {col_level} maps to row level {row_level}"
    )]
    FiltrationViolation { col_level: i32, row_level: i32 },

    #[error("diagram has {components} components, expected a knot")]
    NotAKnot { components: usize },

    #[error("diagram has a negative crossing")]
    NotPositive,

    #[error("diagram has a positive crossing")]
    NotNegative,

    #[error("diagram has supporting genus {genus}, expected a classical diagram")]
    NotClassical { genus: usize },

    #[error("no crossing labelled {label}")]
    UnknownCrossing { label: u32 },

    #[error("inconsistent inputs: sigma_xi - sigma_xi* = {diff}, 2g = {two_g}")]
    InconsistentInputs { diff: i64, two_g: i64 },

    #[error("polynomial parse error: {0}")]
    PolynomialSyntax(String),

    #[error("{crossings} crossings exceed the limit of {limit}")]
    TooLarge { crossings: usize, limit: usize },

    #[error("corpus error: {0}")]
    Corpus(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

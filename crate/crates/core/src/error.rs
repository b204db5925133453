//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by matroid validation, exact linear algebra and the
/// enumeration budgets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A listed element is outside the ground set `0..n`.
    #[error("element {element} out of range for ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    /// Circuit elimination fails on a pair of circuits.
    #[error("circuit axiom violation: {0}")]
    CircuitAxiomViolation(String),

    /// A circuit of size <= 2 (loop or parallel pair) was found.
    #[error("matroid is not simple: {0}")]
    NotSimple(String),

    /// A declared rank does not match the computed one.
    #[error("declared rank {declared} but computed rank {computed}")]
    RankMismatch { declared: usize, computed: usize },

    /// Degree or rank argument outside `0..=rank`.
    #[error("rank {given} out of range 0..={max}")]
    RankOutOfRange { given: usize, max: usize },

    /// Truncation would destroy simplicity or leave nothing.
    #[error("cannot truncate a matroid of rank {rank}: result would not be simple")]
    RankTooLow { rank: usize },

    /// Adic level outside `2..=rank`.
    #[error("adic level {given} out of range 2..={max}")]
    LevelOutOfRange { given: usize, max: usize },

    /// Boundary of a degree-zero element.
    #[error("boundary of a degree-zero element is undefined")]
    DegreeZero,

    /// Wedge product would exceed the ambient degree.
    #[error("product degree {degree} exceeds ambient dimension {n}")]
    DegreeOverflow { degree: usize, n: usize },

    /// Elements or subspaces over different ambient ground sets.
    #[error("mixed ambient ground sets: {0} vs {1}")]
    MixedAmbient(usize, usize),

    /// Operands over different scalar fields.
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    /// A linear map with inconsistent dimensions.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Ground set too large for dense exterior-algebra tables.
    #[error("ground set of size {n} exceeds the supported maximum {max}")]
    GroundSetTooLarge { n: usize, max: usize },

    /// An enumeration exceeded its configured budget.
    #[error("enumeration budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    /// Empty matrix given where columns are required.
    #[error("matrix has no rows or no columns")]
    EmptyMatrix,

    /// Malformed input file or field.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

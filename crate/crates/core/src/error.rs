use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("assignment index {index} out of range for {num_vars} variables")]
    IndexOutOfRange { index: u64, num_vars: usize },

    #[error("variable x{var} out of range for {num_vars} variables")]
    VariableOutOfRange { var: usize, num_vars: usize },

    #[error("cannot restrict a function of a single variable")]
    DegenerateRestriction,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("capacity exceeded: {what} supports at most {max} variables, got {actual}")]
    Capacity {
        what: &'static str,
        max: usize,
        actual: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: variable x{var} appears in more than one rule")]
    DuplicateVariable { line: usize, var: usize },

    #[error("default value {found} must be the complement of the last canalyzed value")]
    InconsistentDefault { found: bool },

    #[error("operation requires a default-normalized representation")]
    NormalizationRequired,

    #[error("invalid argument: {0}")]
    Domain(String),

    #[error(
        "function is not symmetric under the partition: assignments {first:#x} and {second:#x} \
         have equal group counts but different values"
    )]
    NotSymmetricUnderPartition { first: u64, second: u64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for errors caused by an input exceeding a configured size cap.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

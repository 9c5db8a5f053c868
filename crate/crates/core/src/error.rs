use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree {0} exceeds the supported maximum")]
    DegreeTooLarge(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group too large: {0}")]
    GroupTooLarge(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("element or subgroup is not contained in the ambient group")]
    ContainmentViolation,

    #[error("class `{0}` is not a Fitting class")]
    NotAFittingClass(String),

    #[error("class `{0}` is not a formation")]
    NotAFormation(String),

    #[error("class `{class}` lacks required property: {missing}")]
    ClassFlagsMissing { class: String, missing: String },

    #[error("unknown group class `{0}`")]
    UnknownClass(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn too_large(what: impl Into<String>) -> Self {
        Error::GroupTooLarge(what.into())
    }

    /// True for errors that mean "ran out of budget" rather than "wrong input".
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::GroupTooLarge(_) | Error::Unsupported(_))
    }
}

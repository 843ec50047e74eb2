use std::fmt;

/// Crate-wide error type.
///
/// `Shape`/`Composition`/`Degree` flag structurally incompatible arguments,
/// the remaining variants flag semantic failures of the operation itself.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("composition mismatch: {0}")]
    Composition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("not an equivalence: {0}")]
    NotEquivalence(String),
    #[error("not a cocycle")]
    NotCocycle,
    #[error("not reduced form: differential is nonzero")]
    NotReducedForm,
    #[error("nonzero beta")]
    NonzeroBeta,
    #[error("strictify first: {0}")]
    StrictifyFirst(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("degree mismatch: {0}")]
    Degree(String),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// One violated rule reported by a validator, with the witness that broke it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: String,
    pub witness: String,
}

impl Violation {
    pub fn new(rule: impl Into<String>, witness: impl Into<String>) -> Self {
        Violation {
            rule: rule.into(),
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.witness.is_empty() {
            write!(f, "{}", self.rule)
        } else {
            write!(f, "{} at {}", self.rule, self.witness)
        }
    }
}

/// Convert a nonempty violation list into an `Error::Invariant`.
pub fn violations_to_error(violations: &[Violation]) -> Result<()> {
    match violations.first() {
        None => Ok(()),
        Some(first) => Err(Error::Invariant(format!(
            "{} ({} violation{} total)",
            first,
            violations.len(),
            if violations.len() == 1 { "" } else { "s" }
        ))),
    }
}

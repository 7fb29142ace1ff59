use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("duplicate pair ({a}, {b}){}", line.map(|l| format!(" on line {l}")).unwrap_or_default())]
    DuplicatePair {
        a: String,
        b: String,
        line: Option<usize>,
    },

    #[error("universe of {size} elements exceeds the supported maximum of {max}")]
    UniverseTooLarge { size: usize, max: usize },

    #[error("universe of {size} elements exceeds the enumeration bound of {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("pair ({a}, {b}) is unrelated and has no common upper bound")]
    NotUpDirected { a: String, b: String },

    #[error("chooser picked `{picked}` outside the candidates for ({a}, {b})")]
    InvalidChoice {
        a: String,
        b: String,
        picked: String,
    },

    #[error("universes differ")]
    UniverseMismatch,

    #[error("operation table is malformed: {0}")]
    MalformedTable(String),

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("cannot parse term `{input}`: {reason}")]
    TermParse { input: String, reason: String },

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("precondition violated: relation is not {0}")]
    PreconditionViolated(String),

    #[error("groupoid does not realize the relation at {0} cell(s)")]
    RealizationMismatch(usize),

    #[error("representation check failed: {0}")]
    Representation(String),

    #[error("rough class does not belong to this quotient")]
    ForeignClass,

    #[error("family is not a lattice: {0}")]
    NotALattice(String),

    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

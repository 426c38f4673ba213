use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("order relation contains a cycle: {}", .0.join(" <= "))]
    Cycle(Vec<String>),

    #[error("an empty poset is not a lattice")]
    EmptyLattice,

    #[error("`{0}` and `{1}` have no unique {2}")]
    NotALattice(String, String, &'static str),

    #[error("lattice is not distributive: {0}")]
    NotDistributive(String),

    #[error("context is not attribute-reduced (reducible: {}); reduce it first", .0.join(", "))]
    NotReduced(Vec<String>),

    #[error("map has {got} entries, expected {expected}")]
    MapLength { expected: usize, got: usize },

    #[error("map sends `{0}` outside the target lattice")]
    MapOutOfRange(String),

    #[error("map is not injective: `{0}` and `{1}` have the same image")]
    NotInjective(String, String),

    #[error("map does not preserve the join of `{0}` and `{1}`")]
    NotJoinPreserving(String, String),

    #[error("constructed map disagrees with the given embedding at `{0}`")]
    NotFactoring(String),

    #[error("closure system exceeds the limit of {0} closed sets")]
    TooLarge(usize),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

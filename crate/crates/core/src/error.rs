use thiserror::Error;

/// Errors raised by the library. Verdicts (unmixed / not unmixed, CM / not CM)
/// are never errors; they are carried by [`crate::CriterionReport`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("invalid weighting: {0}")]
    InvalidWeighting(String),

    #[error("graph is not very well-covered")]
    NotVeryWellCovered,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("O_{pair} conflict: edge {first}-{second} is already present")]
    OperatorConflict { pair: usize, first: String, second: String },

    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),

    #[error("ideal is not squarefree; polarize it first")]
    NotSquarefree,

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("invalid field characteristic {0}: must be 0 or a prime")]
    InvalidField(u64),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {what} is {got}, limit is {limit}")]
    ResourceCap {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("unknown dataset '{0}'")]
    UnknownDataset(String),

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

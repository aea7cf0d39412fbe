use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("relation is not quadratic: term `{term}` has path length {len} (line {line})")]
    NotQuadratic { term: String, len: usize, line: usize },

    #[error("relation mixes path lengths {a} and {b} (line {line})")]
    NotHomogeneous { a: usize, b: usize, line: usize },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not a module morphism: commuting square fails for arrow `{arrow}` at degree {degree}")]
    NotAMorphism { arrow: String, degree: i64 },

    #[error("module violates relation `{relation}` at degree {degree}")]
    RelationViolated { relation: String, degree: i64 },

    #[error("not a chain map: square at position {0} does not commute")]
    NotAChainMap(i64),

    #[error("differential does not square to zero at position {0}")]
    DifferentialSquare(i64),

    #[error("double complex squares do not commute at bidegree ({0}, {1})")]
    NonCommutingSquares(i64, i64),

    #[error("complex is not linear: generator with shift {shift} at position {position}")]
    NotLinear { position: i64, shift: i64 },

    #[error("horizon {horizon} exceeded: {what}")]
    HorizonExceeded { horizon: usize, what: String },

    #[error("a horizon is required: {0} is locally finite-dimensional")]
    HorizonRequired(String),

    #[error("unsupported over a locally finite-dimensional algebra: {0}")]
    LocallyInfinite(String),

    #[error("invalid module file: {0}")]
    InvalidModuleFile(String),

    #[error("mismatched algebras: {0}")]
    AlgebraMismatch(String),

    #[error("unknown corpus algebra `{0}`")]
    UnknownCorpusName(String),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

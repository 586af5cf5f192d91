use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets do not match")]
    VariableMismatch,

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("variable-power ideal needs a non-empty variable set")]
    EmptyVariableSubset,

    #[error("power exponent must be at least 1")]
    NonPositivePower,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("ideal has {count} generators, cap is {cap}")]
    GeneratorCap { count: usize, cap: usize },

    #[error("lcm lattice exceeded {cap} elements")]
    LatticeCap { cap: usize },

    #[error("integer overflow during elimination")]
    ArithmeticOverflow,

    #[error("characteristic {0} is neither 0 nor a prime")]
    BadCharacteristic(u64),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("graph has {0} vertices, at most 64 are supported")]
    TooManyVertices(usize),

    #[error("graph has no edges")]
    EdgelessGraph,

    #[error("graph has isolated vertices")]
    IsolatedVertices,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

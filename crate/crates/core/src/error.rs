use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot factor zero")]
    ZeroInput,

    #[error("trial division limit reached while factoring {0}")]
    FactorizationLimit(String),

    #[error("Jacobi symbol needs an odd positive modulus, got {0}")]
    InvalidModulus(String),

    #[error("{0} is not a discriminant (must be nonzero and 0 or 1 mod 4)")]
    NotDiscriminant(String),

    #[error("expected an odd integer, got {0}")]
    EvenArgument(String),

    #[error("invalid factored form: {0}")]
    InvalidFactorization(String),

    #[error("group order exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("invalid generators: {0}")]
    InvalidGenerators(String),

    #[error("unsupported group family `{0}`")]
    UnsupportedFamily(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("syntax error at position {position}: expected {expected}, found {found}")]
    Syntax {
        position: usize,
        expected: String,
        found: String,
    },

    #[error("{a} is not coprime to {modulus}")]
    NotCoprime { a: i64, modulus: u64 },

    #[error("not a bijection on 0..{0}")]
    NotBijection(usize),

    #[error("character table bound exceeded: {0}")]
    TableBound(String),

    #[error("eigenspace splitting did not refine after {attempts} attempts")]
    SplittingFailed { attempts: u32 },

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures caused by a configured resource cap rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::TableBound(_) | Error::FactorizationLimit(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

use thiserror::Error;

/// Errors produced by the library.
///
/// Mathematical failures (an unsolvable equation, a matrix outside the
/// group) are ordinary values of this type; callers decide whether they
/// are fatal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("search exhausted after {0} candidates")]
    SearchExhausted(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid modulus {0}: must be nonzero and not a unit")]
    InvalidModulus(String),
    #[error("residues belong to different moduli")]
    ModulusMismatch,
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("unsolvable: gcd({a}, m) = {gcd} does not divide {b}")]
    Unsolvable { a: String, b: String, gcd: String },
    #[error("{what} has {size} elements, exceeding the bound {bound}")]
    TooLarge { what: String, size: String, bound: u64 },
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not a member of the Zelisko group")]
    NotAMember,
    #[error("no invertible sample found after {0} retries")]
    SamplingExhausted(u32),
    #[error("singular input matrix")]
    SingularInput,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal postcondition failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that are answers rather than bad input.
    pub fn is_mathematical(&self) -> bool {
        matches!(self, Error::Unsolvable { .. } | Error::NotAMember)
    }
}

pub type Result<T> = std::result::Result<T, Error>;

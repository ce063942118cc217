use thiserror::Error;

/// Errors raised by the arithmetic, evaluation and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = 2 is not supported")]
    EvenPrime,
    #[error("precision exponent must be at least 1, got {0}")]
    BadPrecision(u32),
    #[error("operands belong to different contexts")]
    ContextMismatch,
    #[error("division by zero at the working precision")]
    DivisionByZero,
    #[error("{value} is not {p}-integral")]
    NotIntegral { value: String, p: u64 },
    #[error("{a} is divisible by {p}; the Teichmüller character is undefined there")]
    TeichmullerOfZero { a: String, p: u64 },
    #[error("direct Γ_p product needs {needed} factors, above the cutoff {cutoff}")]
    OracleCutoff { needed: String, cutoff: u64 },
    #[error("Mahler expansion did not stabilize below {cap} terms")]
    MahlerUnstable { cap: usize },
    #[error("Vandermonde system singular modulo p")]
    VandermondeSingular,
    #[error("invalid Taylor order t = {t} for p = {p}")]
    InvalidTaylorOrder { t: u32, p: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("bottom parameter vanishes at index {index} before the series terminates")]
    ZeroBottom { index: u64 },
    #[error("no primitive {order}-th root of unity in Z_{p}")]
    NoRootOfUnity { order: u64, p: u64 },
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("{0}")]
    BadParameter(String),
    #[error("prime {p} is not admissible for {claim}")]
    Inadmissible { claim: String, p: u64 },
    #[error("only {available} valid p-adic digits left, {needed} required")]
    PrecisionExhausted { available: i64, needed: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;

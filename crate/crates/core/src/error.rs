use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("unsupported modulus {0} (expected 2..=255)")]
    InvalidModulus(u32),

    #[error("operation requires modulus {expected}, got {found}")]
    WrongModulus { expected: u32, found: u32 },

    #[error("{value} is not a residue mod {modulus}")]
    NotResidue { value: u8, modulus: u8 },

    #[error("constant term is not a unit")]
    NotUnit,

    #[error("precision must be at least 1")]
    ZeroPrecision,

    #[error("requested precision {requested} exceeds the cap of {cap}")]
    PrecisionCap { requested: usize, cap: usize },

    #[error("insufficient precision: need at least {required} coefficients, have {available}")]
    InsufficientPrecision { required: usize, available: usize },

    #[error("Hecke iteration count must be at least 1")]
    ZeroIterations,

    #[error("color count must be at least 1")]
    ZeroColors,

    #[error("oracle limited to n <= {limit}, got n = {n}")]
    OracleRange { n: u64, limit: u64 },

    #[error("invalid eta quotient: {0}")]
    InvalidEtaQuotient(String),

    #[error("q-shift {numerator}/{denominator} is not an integer")]
    NonIntegralShift { numerator: i64, denominator: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{0} is not prime")]
    NotPrime(u32),
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("{op} requires degree >= {min}, got degree {degree}")]
    DegreeTooSmall {
        op: &'static str,
        min: isize,
        degree: isize,
    },

    #[error("{op} is undefined for the zero polynomial")]
    ZeroPolynomial { op: &'static str },

    #[error("{op} requires a nonzero constant term (x divides the polynomial)")]
    ConstantTermZero { op: &'static str },

    #[error("invalid maximum-weight parameters m={m}, l={l}: {reason}")]
    MaxWeightDomain { m: u32, l: u32, reason: &'static str },

    #[error("parse error at byte {offset} near {token:?}: {reason}")]
    Parse {
        token: String,
        offset: usize,
        reason: &'static str,
    },

    #[error("factorization of 2^{m}-1 incomplete: cofactor {cofactor} resisted")]
    FactorizationIncomplete { m: u32, cofactor: u64 },

    #[error("Mersenne factorization supports 1 <= m <= 64, got {m}")]
    MersenneRange { m: u32 },

    #[error("primitivity unverifiable for degree {degree}: {reason}")]
    Unverifiable { degree: usize, reason: String },

    #[error("seed has {got} bits, characteristic polynomial needs {expected}")]
    SeedLength { expected: usize, got: usize },

    #[error("requested length {len} is shorter than the register size {m}")]
    LengthTooShort { len: usize, m: usize },

    #[error("seed must be nonzero")]
    ZeroSeed,

    #[error("{poly} is not primitive")]
    NotPrimitive { poly: String },

    #[error("{poly} is not squarefree")]
    NotSquarefree { poly: String },

    #[error("period of {poly} exceeds the search cap {cap}")]
    PeriodCapExceeded { poly: String, cap: u64 },

    #[error("window length {n} is outside the range {min}..={max}")]
    WindowLength { n: usize, min: usize, max: u64 },

    #[error("seed generates {windows} distinct windows, expected the period {period}")]
    SeedNotMaximal { windows: usize, period: u64 },

    #[error("dual enumeration needs n - m <= {bound}, got {got}")]
    EnumerationBound { bound: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

use thiserror::Error;

/// Errors raised by construction and computation routines.
///
/// Size-cap violations are reported with the offending cap so callers can
/// surface it verbatim.
#[derive(Debug, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrime(u64),
    #[error("modulus polynomial must have degree {expected}, got {got}")]
    BadModulusDegree { expected: usize, got: usize },
    #[error("modulus polynomial is reducible over F_{p}")]
    ReducibleModulus { p: u64 },
    #[error("ring modulus k = {0} must be at least 2")]
    ModulusTooSmall(u64),
    #[error("alphabet size {m} exceeds the cap of {cap}")]
    AlphabetTooLarge { m: usize, cap: usize },
    #[error("operation requires a field alphabet")]
    NotAField,
    #[error("symbol {value} out of range for alphabet of size {m}")]
    SymbolOutOfRange { value: u64, m: usize },

    #[error("permutations act on different point sets")]
    PointSetMismatch,
    #[error("image array is not a bijection")]
    NotAPermutation,
    #[error("group closure exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("point set of size {size} exceeds the cap of {cap}")]
    PointSetTooLarge { size: usize, cap: usize },

    #[error("generator row has length {got}, expected {expected}")]
    BadGeneratorLength { expected: usize, got: usize },
    #[error("code size exceeds the cap of {cap} words")]
    CodeTooLarge { cap: usize },
    #[error("search space of {size} vectors exceeds the cap of {cap}")]
    SearchTooLarge { size: u128, cap: u128 },
    #[error("codes have mismatched lengths or alphabets")]
    CodeMismatch,
    #[error("{count} element tuples exceed the cap of {cap}")]
    TooManyTuples { count: u128, cap: u128 },
    #[error("orbit enumeration needs n <= {cap}, got n = {n}")]
    OrbitTooLarge { n: usize, cap: usize },

    #[error("polynomial coefficient domains are incompatible")]
    DomainMismatch,
    #[error("polynomials have mismatched variable shapes")]
    ShapeMismatch,
    #[error("substitution rule missing for a variable occurring in the polynomial")]
    MissingRule,
    #[error("cycle index carries no codeword metadata for tuple {0}")]
    MissingTupleData(usize),
    #[error("cycle index summand disagrees with its codeword data (internal error)")]
    CycleBookkeeping,
    #[error("transform left a non-rational cyclotomic coefficient")]
    NonCancellingCharacter,
    #[error("dual pattern has length {got}, expected {expected}")]
    BadPatternLength { expected: usize, got: usize },

    #[error("invalid JSON input: {0}")]
    Json(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

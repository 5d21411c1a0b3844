use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every domain failure in the crate. [`Error::name`] gives the stable
/// identifier surfaced by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields (m = {0} and m = {1})")]
    FieldMismatch(u64, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial is zero modulo {0}")]
    ZeroPolynomial(u64),
    #[error("modulus is not irreducible over F_{0}")]
    NotIrreducible(u64),
    #[error("zero is not a unit of the residue field")]
    ZeroUnit,
    #[error("{n} does not divide q - 1 = {q_minus_one}")]
    OrderMismatch { n: u64, q_minus_one: String },
    #[error("reference root has order {order}, expected {n}")]
    NotPrimitive { order: u64, n: u64 },
    #[error("element is not an n-th root of unity for n = {0}")]
    NotInSubgroup(u64),
    #[error("prime {p} divides m = {m}")]
    RamifiedPrime { p: u64, m: u64 },
    #[error("ideal has a negative exponent")]
    NegativeExponent,
    #[error("element is zero")]
    ZeroElement,
    #[error("no generator of norm {norm} within squared radius {radius} ({nodes} nodes visited, complete: {complete})")]
    SearchExhausted {
        radius: String,
        norm: String,
        nodes: u64,
        complete: bool,
    },
    #[error("element has valuation {0} at the prime, expected 0")]
    NonUnitAtP(i64),
    #[error("triviality undetermined: {0}")]
    TrivialityUndetermined(String),
    #[error("witness does not certify the ideal: {0}")]
    UncertifiedWitness(String),
    #[error("vector is not in the image of the matrix")]
    NotInImage,
    #[error("{terms} terms exceed the cap of {cap}")]
    TermCapExceeded { terms: String, cap: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("could not factor {0} by trial division")]
    FactorizationIncomplete(String),
}

impl Error {
    /// Stable variant name used in JSON error objects.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch(..) => "FieldMismatch",
            Error::NotPrime(_) => "NotPrime",
            Error::ZeroPolynomial(_) => "ZeroPolynomial",
            Error::NotIrreducible(_) => "NotIrreducible",
            Error::ZeroUnit => "ZeroUnit",
            Error::OrderMismatch { .. } => "OrderMismatch",
            Error::NotPrimitive { .. } => "NotPrimitive",
            Error::NotInSubgroup(_) => "NotInSubgroup",
            Error::RamifiedPrime { .. } => "RamifiedPrime",
            Error::NegativeExponent => "NegativeExponent",
            Error::ZeroElement => "ZeroElement",
            Error::SearchExhausted { .. } => "SearchExhausted",
            Error::NonUnitAtP(_) => "NonUnitAtP",
            Error::TrivialityUndetermined(_) => "TrivialityUndetermined",
            Error::UncertifiedWitness(_) => "UncertifiedWitness",
            Error::NotInImage => "NotInImage",
            Error::TermCapExceeded { .. } => "TermCapExceeded",
            Error::InvalidInput(_) => "InvalidInput",
            Error::FactorizationIncomplete(_) => "FactorizationIncomplete",
        }
    }
}

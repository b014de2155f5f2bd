#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring must have at least one variable")]
    EmptyRing,
    #[error("exponent vector has length {found}, ring has {expected} variables")]
    LengthMismatch { expected: usize, found: usize },
    #[error("negative exponent {value} at position {index}")]
    NegativeExponent { index: usize, value: i64 },
    #[error("operands live in different rings")]
    SpecMismatch,
    #[error("geometric inverse needs a zero constant term")]
    NonzeroConstantTerm,

    #[error("a binary form needs at least one coefficient")]
    EmptyForm,
    #[error("transvectant undefined below degree 1")]
    DegreeTooLow,
    #[error("form degrees differ ({0} vs {1})")]
    DegreeMismatch(usize, usize),

    #[error("{name} = {value} is out of range 0..={max}")]
    IndexOutOfRange { name: &'static str, value: i64, max: i64 },
    #[error("{0} must be a positive integer")]
    NotPositive(&'static str),
    #[error("am ≠ bn ({am} vs {bn})")]
    PowerMismatch { am: u64, bn: u64 },
    #[error("{d} is not divisible by {divisor}")]
    NonIntegral { d: u64, divisor: u64 },
    #[error("unsupported gcd(m,n) = {0} ≥ 3")]
    UnsupportedGcd(u64),
    #[error("Chern polynomial must have degree m+n = {expected}, found a term of degree {found}")]
    ChernDegree { expected: u64, found: u64 },
}

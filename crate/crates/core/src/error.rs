use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("exponent denominator must be 1, 2 or 4, got {0}")]
    BadExponentDenominator(i64),
    #[error("modulus must be an odd integer >= 3, got {0}")]
    BadModulus(u32),
    #[error("module index n = {n} requires n <= m-1 = {max} in specialized mode")]
    ModuleIndexTooLarge { n: u32, max: u32 },
    #[error("scalar mode / algebra mismatch: {0}")]
    ModeMismatch(String),
    #[error("matrix is singular or not invertible over the coefficient ring")]
    SingularMatrix,
    #[error("morphism legs do not compose: {0}")]
    LegMismatch(String),
    #[error("braid parse error: {0}")]
    Parse(String),
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: i32, strands: usize },
    #[error("dimension cap exceeded: {dim}^{strands} > {cap}")]
    DimensionCap { dim: usize, strands: usize, cap: u64 },
    #[error("crossing cap exceeded: {crossings} > {cap}")]
    CrossingCap { crossings: usize, cap: usize },
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("io error: {0}")]
    Io(String),
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field width r = {0}; expected 8 or 16")]
    UnsupportedWidth(u32),

    #[error("reduction polynomial {poly:#x} does not have degree {r}")]
    PolyDegree { r: u32, poly: u32 },

    #[error("reduction polynomial {poly:#x} is not primitive (generator order {order:?})")]
    NotPrimitive { poly: u32, order: Option<u32> },

    #[error("division by zero")]
    DivisionByZero,

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("transform size {size} exceeds the tables' maximum {max}")]
    SizeTooLarge { size: usize, max: usize },

    #[error("shift {shift} is outside the field (size {field_size})")]
    ShiftOutOfRange { shift: usize, field_size: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("invalid code parameters n = {n}, k = {k}")]
    InvalidCodeParams { n: usize, k: usize },

    #[error("erasure set is empty")]
    EmptyErasures,

    #[error("erasure position {0} appears more than once")]
    DuplicateErasure(usize),

    #[error("erasure position {position} is outside the codeword (n = {n})")]
    ErasureOutOfRange { position: usize, n: usize },

    #[error("too many erasures: {erased} erased, at most {max} recoverable")]
    TooManyErasures { erased: usize, max: usize },

    #[error("locator derivative vanished at erased position {0}")]
    ZeroLocatorDerivative(usize),
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials live over different alphabets")]
    AlphabetMismatch,

    #[error("duplicate variable name `{0}` in alphabet")]
    DuplicateVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable `{name}` has the wrong parity for {op}")]
    WrongParity { name: String, op: &'static str },

    #[error("division by zero")]
    DivisionByZero,

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("divisor must involve even variables only")]
    OddDivisor,

    #[error("mode index {index} exceeds the alphabet (modes 0..{modes})")]
    ModeOutOfRange { index: u32, modes: u32 },

    #[error("polynomial is not homogeneous in weight; found weights {0:?}")]
    MixedWeight(Vec<i64>),

    #[error("element is not in the subalgebra generated by a_i, c_i, y_i: {0}")]
    NotInSubalgebra(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("truncation caps too small: {0}")]
    InsufficientCaps(String),

    #[error("series constant term is not invertible")]
    NotInvertible,

    #[error("rational function did not collapse to a polynomial: {0}")]
    ResidualDenominator(String),

    #[error("parse error: {0}")]
    Parse(String),
}

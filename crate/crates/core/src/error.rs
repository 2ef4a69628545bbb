use std::fmt;

/// Errors raised by the construction, verification and search routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    /// Modulus outside `2..2^31`.
    OutOfRange(u64),
    FieldMismatch { left: u32, right: u32 },
    DivisionByZero,
    InvalidOrder(usize),
    /// The lowest recurrence coefficient is zero, so the sequence cannot be run backwards.
    Irreversible,
    LengthMismatch { coeffs: usize, init: usize },
    CapExceeded(u64),
    SizeLimit { size: u64, limit: u64 },
    NotSquare { rows: usize, cols: usize },
    TooLarge { cells: usize, cap: usize },
    CellOutsideSupport { row: usize, col: usize },
    InvalidMatrix(String),
    Parse { line: usize, msg: String },
    InvalidParameter(String),
    InvariantViolated(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::OutOfRange(p) => write!(f, "modulus {p} is outside the supported range [2, 2^31)"),
            Error::FieldMismatch { left, right } => {
                write!(f, "field mismatch: F_{left} vs F_{right}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InvalidOrder(r) => write!(f, "invalid recurrence order {r}"),
            Error::Irreversible => write!(f, "recurrence is not reversible (c_0 = 0)"),
            Error::LengthMismatch { coeffs, init } => write!(
                f,
                "coefficient list has length {coeffs} but initial values have length {init}"
            ),
            Error::CapExceeded(cap) => write!(f, "no period found within {cap} steps"),
            Error::SizeLimit { size, limit } => {
                write!(f, "size {size} exceeds the configured limit {limit}")
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is not square ({rows}x{cols})"),
            Error::TooLarge { cells, cap } => {
                write!(f, "{cells} support cells exceed the enumeration cap {cap}")
            }
            Error::CellOutsideSupport { row, col } => {
                write!(f, "cell ({row}, {col}) is not in the support")
            }
            Error::InvalidMatrix(msg) => write!(f, "invalid matrix: {msg}"),
            Error::Parse { line, msg } => write!(f, "parse error on line {line}: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InvariantViolated(msg) => write!(f, "invariant violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    EmptyInput,
    ZeroGenerator,
    /// A generator or target has a negative coordinate.
    NegativeCoordinate,
    NonCoprimeGenerators {
        gcd: i64,
    },
    ZeroVectorGenerator,
    DuplicateGenerator,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    NotAMember {
        element: i64,
    },
    ArithmeticOverflow,
    BoundTooSmall {
        bound: i64,
        required: i64,
    },
    TooManyGenerators {
        count: usize,
        limit: usize,
    },
    InvalidPartition,
    InvalidGluing(&'static str),
    InvalidParams(&'static str),
    UnsupportedX {
        x: i64,
    },
    NotEmbeddingDimension3,
    NotMed,
    NotInTheoremScope(&'static str),
}

impl Error {
    /// Whether the error stems from bad input rather than a computational
    /// limit (overflow, search guards).
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::ArithmeticOverflow | Error::TooManyGenerators { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "empty generator list"),
            Error::ZeroGenerator => write!(f, "generators must be positive"),
            Error::NegativeCoordinate => write!(f, "negative coordinate in input"),
            Error::NonCoprimeGenerators { gcd } => {
                write!(f, "generators have gcd {gcd}, expected 1")
            }
            Error::ZeroVectorGenerator => write!(f, "zero vector given as generator"),
            Error::DuplicateGenerator => write!(f, "duplicate generator"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected dimension {expected}, found {found}")
            }
            Error::NotAMember { element } => write!(f, "{element} is not in the semigroup"),
            Error::ArithmeticOverflow => write!(f, "arithmetic overflow"),
            Error::BoundTooSmall { bound, required } => {
                write!(f, "bound {bound} is below the required {required}")
            }
            Error::TooManyGenerators { count, limit } => {
                write!(f, "{count} generators exceed the search limit of {limit}")
            }
            Error::InvalidPartition => {
                write!(
                    f,
                    "partition must be a proper nonempty subset of the generators"
                )
            }
            Error::InvalidGluing(why) => write!(f, "invalid gluing: {why}"),
            Error::InvalidParams(why) => write!(f, "invalid parameters: {why}"),
            Error::UnsupportedX { x } => {
                write!(f, "no closed form for intervals of length x = {x}")
            }
            Error::NotEmbeddingDimension3 => {
                write!(f, "parameters do not give embedding dimension 3")
            }
            Error::NotMed => write!(f, "semigroup is not of maximal embedding dimension"),
            Error::NotInTheoremScope(why) => write!(f, "outside the closed form's scope: {why}"),
        }
    }
}

impl core::error::Error for Error {}

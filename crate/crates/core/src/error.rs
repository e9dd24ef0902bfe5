use thiserror::Error;

/// Everything that can go wrong inside the library.
///
/// Variant names double as the stable diagnostic tokens printed by the CLI,
/// see [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("negative input {0}; only nonnegative rationals are supported")]
    NegativeInput(i64),
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("{what} = {got} exceeds the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        got: u64,
        limit: u64,
    },
    #[error("{fraction} is not a term of the Farey row of order {order}")]
    NotInRow { fraction: String, order: u64 },
    #[error("{0} is an endpoint of the row and has a neighbor on one side only")]
    Endpoint(String),
    #[error("{0} is not strictly between 0/1 and 1/1")]
    OutOfRange(String),
    #[error("gcd({m}, {n}) = {gcd}, expected 1")]
    NotCoprime { m: u64, n: u64, gcd: u64 },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
}

impl Error {
    /// Short, stable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroDenominator => "ZeroDenominator",
            Error::NegativeInput(_) => "NegativeInput",
            Error::ZeroOrder => "ZeroOrder",
            Error::BothZero => "BothZero",
            Error::Overflow(_) => "Overflow",
            Error::LimitExceeded { .. } => "LimitExceeded",
            Error::NotInRow { .. } => "NotInRow",
            Error::Endpoint(_) => "Endpoint",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::Parse { .. } => "Parse",
        }
    }

    pub(crate) fn limit(what: &'static str, got: u64, limit: u64) -> Result<(), Error> {
        if got > limit {
            Err(Error::LimitExceeded { what, got, limit })
        } else {
            Ok(())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

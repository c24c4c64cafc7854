use crate::algebra::XsPoly;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("pole at q value {0}")]
    Pole(String),
    #[error("series division needs an invertible constant term")]
    SeriesNotInvertible,
    #[error("oracle bound exceeded: n = {n} > cap {cap}")]
    OracleBound { n: usize, cap: usize },
    #[error("singular leading Hankel minor of order {0}")]
    SingularHankel(usize),
    #[error("q = -1 is excluded")]
    ExcludedQ,
    /// An identity failed; `residual` is left side minus right side.
    #[error("{what}: residual {residual}")]
    Mismatch { what: String, residual: XsPoly },
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub fn mismatch(what: impl Into<String>, residual: XsPoly) -> Self {
        Error::Mismatch {
            what: what.into(),
            residual,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// `Ok(())` when `lhs == rhs`, otherwise a [`Error::Mismatch`] carrying the
/// difference.
pub fn expect_eq(what: impl Into<String>, lhs: &XsPoly, rhs: &XsPoly) -> Result<()> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::mismatch(what, lhs - rhs))
    }
}

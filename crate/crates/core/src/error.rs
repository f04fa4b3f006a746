use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument lies on (or numerically next to) a pole.
    #[error("pole at or near {re}{im:+}i")]
    Pole { re: f64, im: f64 },

    #[error("argument out of supported range: {0}")]
    Range(String),

    /// Series with `p = q + 1` and `|z| > 1`, or `p > q + 1`.
    #[error("series diverges: {0}")]
    Divergent(String),

    /// Unit-argument theorem used outside `Re(c - a - b) > 0`.
    #[error("outside convergence domain: Re(c - a - b) = {0} <= 0")]
    ConvergenceDomain(f64),

    #[error("unit argument rejected by summation policy")]
    UnitArgumentRejected,

    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },

    #[error("invalid summation policy: {0}")]
    InvalidPolicy(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero")]
    DivideByZero,
}

impl Error {
    pub(crate) fn pole<T: num_traits::ToPrimitive>(re: T, im: T) -> Self {
        Error::Pole {
            re: re.to_f64().unwrap_or(f64::NAN),
            im: im.to_f64().unwrap_or(f64::NAN),
        }
    }
}

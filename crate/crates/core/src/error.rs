use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("time {t} outside of the valid range [{lo}, {hi}]")]
    Range { t: f64, lo: f64, hi: f64 },

    #[error("operation `{op}` is not supported for the {variant} scenario")]
    UnsupportedVariant { op: &'static str, variant: &'static str },

    #[error("invalid parameter `{name}`: {reason}")]
    Parameter { name: &'static str, reason: String },

    #[error("gamma function pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("special function did not reach the requested accuracy (estimate {estimate:e})")]
    Accuracy { estimate: f64 },

    #[error("step size underflow at t = {t} (h = {h:e})")]
    Stiffness { t: f64, h: f64 },

    #[error("invalid scenario: {0}")]
    Scenario(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::Parameter {
            name,
            reason: reason.into(),
        }
    }
}

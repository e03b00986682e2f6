//! Exact arithmetic in K = F_p(t) with the t-adic valuation.
//!
//! The uniformizer is `t`. The valuation ring R is `{x : v(x) >= 0}`, its
//! maximal ideal is `{x : v(x) >= 1}`.

mod parse;
mod poly;
mod scalar;

pub use parse::scalar_parse;
pub use poly::FpPoly;
pub use scalar::{LocalScalar, PrimeConfig, Valuation};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalFieldError {
    #[error("unsupported prime {0}; expected one of 2, 3, 5, 7")]
    UnsupportedPrime(u32),
    #[error("cannot parse scalar {input:?}: {message}")]
    Parse { input: String, message: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("generalized binomial C(y, {m}) needs 0 <= m < p = {p}")]
    BinomialOutOfRange { m: i64, p: u32 },
}

pub fn valuation(x: &LocalScalar) -> Valuation {
    x.valuation()
}

pub fn wp(x: &LocalScalar) -> LocalScalar {
    x.wp()
}

pub fn frobenius(x: &LocalScalar) -> LocalScalar {
    x.frobenius()
}

pub fn gen_binom(y: &LocalScalar, m: i64) -> Result<LocalScalar, LocalFieldError> {
    y.gen_binom(m)
}

use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gcd undefined: both polynomials are zero")]
    GcdUndefined,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("not a polynomial: Γ(ν+{upper})/Γ(ν+{lower}) needs upper ≥ lower ≥ 0")]
    NotAPolynomial { upper: i64, lower: i64 },

    #[error("q = {q} out of range for p = {p} (0 ≤ q ≤ {q_max})")]
    QOutOfRange { p: u32, q: u32, q_max: u32 },

    #[error("invalid order p = {0}: must be ≥ 1")]
    InvalidOrder(u32),

    #[error("evaluation at pole nu={0}")]
    Pole(Rational),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("failed to bracket zero: {0}")]
    Bracket(String),

    #[error("denominator underflow: |J_{{ν+1}}| = {0:e} at the supplied zero")]
    DenominatorUnderflow(f64),

    #[error("numeric breakdown: {0}")]
    Breakdown(String),

    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),

    #[error("malformed table: {0}")]
    Table(String),
}

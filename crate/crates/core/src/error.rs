use thiserror::Error;

use crate::eisenstein::EisensteinInt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("integer overflow in Eisenstein arithmetic")]
    Overflow,
    #[error("{0} is not divisible by {1}")]
    NotDivisible(EisensteinInt, EisensteinInt),
    #[error("division by zero")]
    DivisionByZero,
    #[error("reflection vector has h(v,v) = {0}, expected 1 or 2")]
    BadNorm(i64),
    #[error("{0} is not a unit different from 1")]
    BadUnit(EisensteinInt),
    #[error("reflection with eigenvalue {zeta} in a vector of norm {norm} does not preserve the lattice")]
    NonIntegral { zeta: EisensteinInt, norm: i64 },
    #[error("matrix does not preserve the hermitian form")]
    NotIsometry,
    #[error("reflection vector is isotropic for q")]
    IsotropicVector,
    #[error("group closure exceeded the cap of {cap} elements")]
    ResourceCap { cap: usize },
    #[error("no isometry from the reduced E6 quotient onto (F3^5, q) or (F3^5, 2q)")]
    IsometryNotFound,
    #[error("{0} is not a line class")]
    NotALine(String),
    #[error("point is not in the ball: h(z,z) = {0}")]
    NotInBall(f64),
    #[error("vector is not null: h(n,n) = {0}")]
    NotNull(i64),
    #[error("vector is divisible by theta")]
    Imprimitive,
    #[error("exponent {0} is smaller than 2")]
    BadExponent(i64),
    #[error("empty exponent vector")]
    EmptyExponents,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("value exceeds representable range (saturation threshold {threshold:e})")]
    Overflow { threshold: f64 },

    #[error("inverse out of bracket: target {target:e} not reached, last bracket [{lo:e}, {hi:e}]")]
    InverseOutOfBracket { target: f64, lo: f64, hi: f64 },

    #[error("conjugate infinite at t = {t:e}: supremum still growing at the upper bracket end")]
    ConjugateInfinite { t: f64 },

    #[error("degenerate Young function: A(t) = 0 at t = {t:e} > 0")]
    DegenerateYoung { t: f64 },

    #[error("indeterminate at t = {t:e}: all samples overflowed")]
    IndeterminateAt { t: f64 },

    #[error("limit indeterminate: no resolvable terms in the tail")]
    LimitIndeterminate,

    #[error("index not estimable: only {samples} finite samples")]
    IndexNotEstimable { samples: usize },

    #[error("E undefined: growth condition for the conjugate tail integral violated")]
    SupercriticalConditionViolated,

    #[error("tail inconclusive: fitted tail exponent {slope} too close to the integrability threshold {threshold}")]
    TailInconclusive { slope: f64, threshold: f64 },

    #[error("domain vanishes at this resolution (h = {h:e})")]
    DomainVanishes { h: f64 },

    #[error("normalization unreachable at saturation: modular saturates at {reached:e} below target {target:e}")]
    NormalizationUnreachable { target: f64, reached: f64 },

    #[error("solver nonconvergent: best objective {best:e} after {starts} starts")]
    Nonconvergent { best: f64, starts: usize },

    #[error("degenerate test pairing: weak-form denominator vanished")]
    DegeneratePairing,

    #[error("origin not in domain")]
    OriginNotInDomain,

    #[error("interval unbounded: doubling exponent is infinite")]
    IntervalUnbounded,

    #[error("alpha0 out of range: no bracket for the energy equation in [{lo:e}, {hi:e}]")]
    Alpha0OutOfRange { lo: f64, hi: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

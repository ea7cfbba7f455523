use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree must be in 1..={max}, got {got}")]
    InvalidDegree { got: u32, max: u32 },

    #[error("polynomial {poly:#x} has degree {got:?}, expected {expected}")]
    WrongPolyDegree {
        poly: u64,
        expected: u32,
        got: Option<u32>,
    },

    #[error("polynomial {0:#x} is reducible over GF(2)")]
    Reducible(u64),

    #[error("element {bits:#x} does not fit in GF(2^{degree})")]
    ElementOutOfRange { bits: u64, degree: u32 },

    #[error("nu = {0:#x} must have absolute trace 1")]
    NuTraceZero(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{e} is not invertible modulo {modulus}")]
    NotInvertible { e: u64, modulus: u64 },

    #[error("element is not in the required set: {0}")]
    Domain(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration of 2^{log2_terms} terms exceeds the budget of 2^{budget}")]
    Budget { log2_terms: u32, budget: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::poly::VarId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot substitute a non-unit polynomial for {var}, which occurs with a negative exponent")]
    NegativeExponentSubstitution { var: VarId },
    #[error("no value assigned to variable {var}")]
    MissingAssignment { var: VarId },
    #[error("variable {var} occurs with a negative exponent but was assigned zero")]
    ZeroAtLaurentPole { var: VarId },
    #[error("polynomial is not divisible by x{i} - x{j}")]
    NotDivisible { i: u32, j: u32 },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("part {part} exceeds the bound {bound}")]
    PartTooLarge { part: u32, bound: u32 },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("route {0} needs a composition, not an arbitrary polynomial")]
    UnsupportedRoute(&'static str),
    #[error("no admissible specialization found after {attempts} draws")]
    DegenerateSpecialization { attempts: u32 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

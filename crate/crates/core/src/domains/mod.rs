//! The shipped example domains, each with its mirror symmetry, and the
//! sensorless belief-state wrapper.

mod belief;
mod hanoi;
mod missionaries;
mod vacuum;

use std::fmt;
use std::str::FromStr;

use crate::problem::Problem;
use crate::symmetry::Automorphism;

pub use belief::{belief_wrap, Belief, BeliefState};
pub use hanoi::{make_hanoi, Hanoi, HanoiMove, HanoiState, Peg};
pub use missionaries::{make_mc, Crossing, McMove, McState, Missionaries, DEFAULT_MOVES};
pub use vacuum::{make_vacuum, Boundary, VacuumAction, VacuumState, VacuumWorld};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DomainError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid state `{0}`")]
    InvalidState(String),
    #[error("belief state must have at least one member")]
    EmptyBelief,
    #[error("unknown domain `{0}`")]
    UnknownDomain(String),
}

/// Domains that ship an involutive mirror symmetry.
pub trait ShippedMirror: Problem {
    fn mirror(&self) -> Automorphism<Self::State, Self::Action>;
}

/// Identifiers of the shipped domains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainKind {
    Vacuum,
    Missionaries,
    Hanoi,
}

impl FromStr for DomainKind {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vacuum" => Ok(DomainKind::Vacuum),
            "mc" => Ok(DomainKind::Missionaries),
            "hanoi" => Ok(DomainKind::Hanoi),
            other => Err(DomainError::UnknownDomain(other.to_string())),
        }
    }
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DomainKind::Vacuum => "vacuum",
            DomainKind::Missionaries => "mc",
            DomainKind::Hanoi => "hanoi",
        })
    }
}

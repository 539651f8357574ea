use std::fmt;

use super::{DomainError, ShippedMirror};
use crate::problem::{Problem, State};
use crate::symmetry::Automorphism;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Peg {
    A,
    B,
    C,
}

impl Peg {
    pub const ALL: [Peg; 3] = [Peg::A, Peg::B, Peg::C];

    fn parse(s: &str) -> Option<Peg> {
        match s {
            "A" => Some(Peg::A),
            "B" => Some(Peg::B),
            "C" => Some(Peg::C),
            _ => None,
        }
    }

    fn swap_outer(self) -> Peg {
        match self {
            Peg::A => Peg::C,
            Peg::B => Peg::B,
            Peg::C => Peg::A,
        }
    }
}

impl fmt::Display for Peg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Peg of each disk; index 0 is disk 1, the largest. Rendered `A,A,C`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HanoiState {
    pub pegs: Vec<Peg>,
}

impl HanoiState {
    pub fn uniform(disks: usize, peg: Peg) -> Self {
        HanoiState {
            pegs: vec![peg; disks],
        }
    }

    pub fn parse(disks: usize, text: &str) -> Result<Self, DomainError> {
        let pegs = text
            .split(',')
            .map(Peg::parse)
            .collect::<Option<Vec<_>>>()
            .filter(|p| p.len() == disks)
            .ok_or_else(|| DomainError::InvalidState(text.to_string()))?;
        Ok(HanoiState { pegs })
    }

    /// Smallest disk on `peg`, numbered from 1 (largest).
    fn top(&self, peg: Peg) -> Option<usize> {
        self.pegs.iter().rposition(|&p| p == peg).map(|i| i + 1)
    }
}

impl fmt::Display for HanoiState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pegs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl State for HanoiState {
    fn encode(&self) -> Vec<u8> {
        self.pegs.iter().map(|&p| p as u8).collect()
    }
}

/// Move disk `disk` (1 = largest) from one peg to another, rendered `(3,A,C)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HanoiMove {
    pub disk: usize,
    pub from: Peg,
    pub to: Peg,
}

impl fmt::Display for HanoiMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.disk, self.from, self.to)
    }
}

/// Peg pairs in action order.
const PEG_PAIRS: [(Peg, Peg); 6] = [
    (Peg::A, Peg::B),
    (Peg::A, Peg::C),
    (Peg::B, Peg::A),
    (Peg::B, Peg::C),
    (Peg::C, Peg::A),
    (Peg::C, Peg::B),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hanoi {
    disks: usize,
    initial: HanoiState,
}

/// Three-peg towers of Hanoi with `disks` disks, all moving from A to C.
pub fn make_hanoi(disks: usize) -> Result<Hanoi, DomainError> {
    if disks == 0 {
        return Err(DomainError::InvalidParameter(
            "need at least one disk".into(),
        ));
    }
    Ok(Hanoi {
        disks,
        initial: HanoiState::uniform(disks, Peg::A),
    })
}

impl Hanoi {
    /// Starts from an arbitrary configuration instead of all disks on A.
    pub fn with_initial(mut self, initial: HanoiState) -> Result<Self, DomainError> {
        if initial.pegs.len() != self.disks {
            return Err(DomainError::InvalidState(initial.to_string()));
        }
        self.initial = initial;
        Ok(self)
    }

    pub fn disks(&self) -> usize {
        self.disks
    }
}

impl Problem for Hanoi {
    type State = HanoiState;
    type Action = HanoiMove;

    fn initial(&self) -> HanoiState {
        self.initial.clone()
    }

    fn actions(&self, state: &HanoiState) -> Vec<HanoiMove> {
        PEG_PAIRS
            .iter()
            .filter_map(|&(from, to)| {
                let disk = state.top(from)?;
                // A larger index is a smaller disk.
                match state.top(to) {
                    Some(other) if other > disk => None,
                    _ => Some(HanoiMove { disk, from, to }),
                }
            })
            .collect()
    }

    fn result(&self, state: &HanoiState, action: &HanoiMove) -> HanoiState {
        assert_eq!(
            state.top(action.from),
            Some(action.disk),
            "move {action} is not applicable in {state}"
        );
        let mut next = state.clone();
        next.pegs[action.disk - 1] = action.to;
        next
    }

    fn is_goal(&self, state: &HanoiState) -> bool {
        state.pegs.iter().all(|&p| p == Peg::C)
    }

    fn inverse(&self, action: &HanoiMove) -> Option<HanoiMove> {
        Some(HanoiMove {
            disk: action.disk,
            from: action.to,
            to: action.from,
        })
    }

    fn goal_states(&self) -> Option<Vec<HanoiState>> {
        Some(vec![HanoiState::uniform(self.disks, Peg::C)])
    }
}

impl ShippedMirror for Hanoi {
    /// Exchanges pegs A and C in states and moves.
    fn mirror(&self) -> Automorphism<HanoiState, HanoiMove> {
        Automorphism::new(
            "hanoi-mirror",
            |s: &HanoiState| HanoiState {
                pegs: s.pegs.iter().map(|p| p.swap_outer()).collect(),
            },
            |m: &HanoiMove| HanoiMove {
                disk: m.disk,
                from: m.from.swap_outer(),
                to: m.to.swap_outer(),
            },
            true,
        )
    }
}

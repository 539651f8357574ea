use std::fmt;

use super::{DomainError, ShippedMirror};
use crate::problem::{Problem, State};
use crate::symmetry::Automorphism;

/// Missionaries and cannibals on the right bank, and the boat side
/// (1 = right, 0 = left). Everyone starts on the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct McState {
    pub m: u8,
    pub c: u8,
    pub boat: u8,
}

impl McState {
    pub fn new(m: u8, c: u8, boat: u8) -> Self {
        McState { m, c, boat }
    }

    pub fn parse(text: &str) -> Result<Self, DomainError> {
        let bad = || DomainError::InvalidState(text.to_string());
        let parts = text
            .split(',')
            .map(|p| p.parse::<u8>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        match parts[..] {
            [m, c, boat] if boat <= 1 => Ok(McState::new(m, c, boat)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for McState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.m, self.c, self.boat)
    }
}

impl State for McState {
    fn encode(&self) -> Vec<u8> {
        vec![self.m, self.c, self.boat]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Crossing {
    /// Boat goes from the right bank to the left.
    ToLeft,
    ToRight,
}

/// Ferry `dm` missionaries and `dc` cannibals across. Rendered as the
/// signed vector added to the state, e.g. `-(1,1,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct McMove {
    pub dm: u8,
    pub dc: u8,
    pub crossing: Crossing,
}

impl fmt::Display for McMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.crossing {
            Crossing::ToLeft => '-',
            Crossing::ToRight => '+',
        };
        write!(f, "{sign}({},{},1)", self.dm, self.dc)
    }
}

/// Boat loads for a capacity of two: one or two people, any mix.
pub const DEFAULT_MOVES: [(u8, u8); 5] = [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Missionaries {
    m_total: u8,
    c_total: u8,
    moves: Vec<(u8, u8)>,
    initial: McState,
}

/// Missionaries and cannibals with the given head counts and boat loads.
pub fn make_mc(m_total: u8, c_total: u8, moves: &[(u8, u8)]) -> Result<Missionaries, DomainError> {
    if moves.is_empty() {
        return Err(DomainError::InvalidParameter("empty move set".into()));
    }
    if moves.contains(&(0, 0)) {
        return Err(DomainError::InvalidParameter(
            "the boat must carry at least one person".into(),
        ));
    }
    Ok(Missionaries {
        m_total,
        c_total,
        moves: moves.to_vec(),
        initial: McState::new(m_total, c_total, 1),
    })
}

impl Default for Missionaries {
    fn default() -> Self {
        make_mc(3, 3, &DEFAULT_MOVES).expect("default moves are valid")
    }
}

impl Missionaries {
    /// Starts from `initial` instead of everyone on the right bank.
    pub fn with_initial(mut self, initial: McState) -> Result<Self, DomainError> {
        if !self.is_valid(&initial) {
            return Err(DomainError::InvalidState(initial.to_string()));
        }
        self.initial = initial;
        Ok(self)
    }

    pub fn totals(&self) -> (u8, u8) {
        (self.m_total, self.c_total)
    }

    /// Bounds hold and no bank has missionaries outnumbered by cannibals.
    pub fn is_valid(&self, s: &McState) -> bool {
        if s.m > self.m_total || s.c > self.c_total || s.boat > 1 {
            return false;
        }
        let (lm, lc) = (self.m_total - s.m, self.c_total - s.c);
        (s.m == 0 || s.m >= s.c) && (lm == 0 || lm >= lc)
    }

    fn apply(&self, s: &McState, mv: &McMove) -> Option<McState> {
        let next = match mv.crossing {
            Crossing::ToLeft => McState::new(s.m.checked_sub(mv.dm)?, s.c.checked_sub(mv.dc)?, 0),
            Crossing::ToRight => McState::new(s.m.checked_add(mv.dm)?, s.c.checked_add(mv.dc)?, 1),
        };
        self.is_valid(&next).then_some(next)
    }
}

impl Problem for Missionaries {
    type State = McState;
    type Action = McMove;

    fn initial(&self) -> McState {
        self.initial
    }

    fn actions(&self, state: &McState) -> Vec<McMove> {
        let crossing = if state.boat == 1 {
            Crossing::ToLeft
        } else {
            Crossing::ToRight
        };
        self.moves
            .iter()
            .map(|&(dm, dc)| McMove { dm, dc, crossing })
            .filter(|mv| self.apply(state, mv).is_some())
            .collect()
    }

    fn result(&self, state: &McState, action: &McMove) -> McState {
        self.apply(state, action)
            .unwrap_or_else(|| panic!("move {action} is not applicable in {state}"))
    }

    fn is_goal(&self, state: &McState) -> bool {
        *state == McState::new(0, 0, 0)
    }

    fn inverse(&self, action: &McMove) -> Option<McMove> {
        Some(flip(action))
    }

    fn goal_states(&self) -> Option<Vec<McState>> {
        Some(vec![McState::new(0, 0, 0)])
    }
}

fn flip(mv: &McMove) -> McMove {
    McMove {
        crossing: match mv.crossing {
            Crossing::ToLeft => Crossing::ToRight,
            Crossing::ToRight => Crossing::ToLeft,
        },
        ..*mv
    }
}

impl ShippedMirror for Missionaries {
    /// Swaps the banks: every count is complemented and every crossing
    /// reversed. Maps the initial state onto the goal.
    fn mirror(&self) -> Automorphism<McState, McMove> {
        let (mt, ct) = (self.m_total, self.c_total);
        Automorphism::new(
            "mc-mirror",
            move |s: &McState| McState::new(mt - s.m, ct - s.c, 1 - s.boat),
            flip,
            true,
        )
    }
}

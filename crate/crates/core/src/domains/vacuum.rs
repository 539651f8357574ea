use std::fmt;

use super::{DomainError, ShippedMirror};
use crate::problem::{Problem, State};
use crate::symmetry::Automorphism;

/// Cleaner position on a line of `n` squares plus one dirt flag per square.
///
/// Rendered as `L,1,1` / `R,0,1` for two squares and `2,1,0,1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VacuumState {
    pub position: usize,
    pub dirt: Vec<bool>,
}

impl VacuumState {
    pub fn new(position: usize, dirt: Vec<bool>) -> Self {
        VacuumState { position, dirt }
    }

    /// Cleaner at square 0, every square dirty.
    pub fn all_dirty(n: usize) -> Self {
        VacuumState::new(0, vec![true; n])
    }

    pub fn squares(&self) -> usize {
        self.dirt.len()
    }

    pub fn is_clean(&self) -> bool {
        self.dirt.iter().all(|d| !d)
    }

    /// Parses the rendering for a world of `n` squares.
    pub fn parse(n: usize, text: &str) -> Result<Self, DomainError> {
        let bad = || DomainError::InvalidState(text.to_string());
        let mut parts = text.split(',');
        let position = match parts.next().ok_or_else(bad)? {
            "L" if n == 2 => 0,
            "R" if n == 2 => 1,
            p => p.parse::<usize>().map_err(|_| bad())?,
        };
        let dirt = parts
            .map(|p| match p {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if dirt.len() != n || position >= n {
            return Err(bad());
        }
        Ok(VacuumState { position, dirt })
    }
}

impl fmt::Display for VacuumState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.squares(), self.position) {
            (2, 0) => f.write_str("L")?,
            (2, _) => f.write_str("R")?,
            (_, p) => write!(f, "{p}")?,
        }
        for &d in &self.dirt {
            write!(f, ",{}", u8::from(d))?;
        }
        Ok(())
    }
}

impl State for VacuumState {
    fn encode(&self) -> Vec<u8> {
        let mut bytes = (self.position as u32).to_be_bytes().to_vec();
        bytes.extend(self.dirt.iter().map(|&d| u8::from(d)));
        bytes
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VacuumAction {
    Left,
    Right,
    Suck,
}

impl fmt::Display for VacuumAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VacuumAction::Left => "Left",
            VacuumAction::Right => "Right",
            VacuumAction::Suck => "Suck",
        })
    }
}

/// What a move into the wall does.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Boundary {
    /// The move is not applicable. Left and Right are then mutual inverses.
    #[default]
    Blocked,
    /// The move is applicable and leaves the cleaner where it is. Every
    /// action applies everywhere, which sensorless planning needs; moves then
    /// have no inverses.
    Stay,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VacuumWorld {
    n: usize,
    initial: VacuumState,
    boundary: Boundary,
}

/// The `n`-square vacuum world with walls that block movement.
pub fn make_vacuum(n: usize, initial: VacuumState) -> Result<VacuumWorld, DomainError> {
    VacuumWorld::new(n, initial, Boundary::Blocked)
}

impl VacuumWorld {
    pub fn new(n: usize, initial: VacuumState, boundary: Boundary) -> Result<Self, DomainError> {
        if n == 0 {
            return Err(DomainError::InvalidParameter(
                "vacuum world needs at least one square".into(),
            ));
        }
        if initial.squares() != n || initial.position >= n {
            return Err(DomainError::InvalidState(initial.to_string()));
        }
        Ok(VacuumWorld {
            n,
            initial,
            boundary,
        })
    }

    pub fn squares(&self) -> usize {
        self.n
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    /// Every state of the world, in state order.
    pub fn all_states(&self) -> Vec<VacuumState> {
        let mut states = Vec::with_capacity(self.n << self.n);
        for position in 0..self.n {
            for bits in 0..1usize << self.n {
                let dirt = (0..self.n)
                    .map(|i| bits >> (self.n - 1 - i) & 1 == 1)
                    .collect();
                states.push(VacuumState::new(position, dirt));
            }
        }
        states
    }
}

impl Problem for VacuumWorld {
    type State = VacuumState;
    type Action = VacuumAction;

    fn initial(&self) -> VacuumState {
        self.initial.clone()
    }

    fn actions(&self, state: &VacuumState) -> Vec<VacuumAction> {
        let mut actions = Vec::with_capacity(3);
        let stay = self.boundary == Boundary::Stay;
        if stay || state.position > 0 {
            actions.push(VacuumAction::Left);
        }
        if stay || state.position + 1 < self.n {
            actions.push(VacuumAction::Right);
        }
        actions.push(VacuumAction::Suck);
        actions
    }

    fn result(&self, state: &VacuumState, action: &VacuumAction) -> VacuumState {
        let mut next = state.clone();
        match action {
            VacuumAction::Left => next.position = state.position.saturating_sub(1),
            VacuumAction::Right => next.position = (state.position + 1).min(self.n - 1),
            VacuumAction::Suck => next.dirt[state.position] = false,
        }
        next
    }

    fn is_goal(&self, state: &VacuumState) -> bool {
        state.is_clean()
    }

    fn inverse(&self, action: &VacuumAction) -> Option<VacuumAction> {
        match (self.boundary, action) {
            (Boundary::Blocked, VacuumAction::Left) => Some(VacuumAction::Right),
            (Boundary::Blocked, VacuumAction::Right) => Some(VacuumAction::Left),
            _ => None,
        }
    }

    fn goal_states(&self) -> Option<Vec<VacuumState>> {
        Some(
            (0..self.n)
                .map(|p| VacuumState::new(p, vec![false; self.n]))
                .collect(),
        )
    }
}

impl ShippedMirror for VacuumWorld {
    /// Reflects the line: square `i` becomes `n-1-i` and Left/Right swap.
    fn mirror(&self) -> Automorphism<VacuumState, VacuumAction> {
        let n = self.n;
        Automorphism::new(
            "vacuum-mirror",
            move |s: &VacuumState| {
                let mut dirt = s.dirt.clone();
                dirt.reverse();
                VacuumState::new(n - 1 - s.position, dirt)
            },
            |a: &VacuumAction| match a {
                VacuumAction::Left => VacuumAction::Right,
                VacuumAction::Right => VacuumAction::Left,
                VacuumAction::Suck => VacuumAction::Suck,
            },
            true,
        )
    }
}

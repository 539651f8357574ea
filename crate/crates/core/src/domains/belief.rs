use std::fmt;

use super::DomainError;
use crate::problem::{Problem, State};

/// A non-empty set of base states, kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BeliefState<S> {
    members: Vec<S>,
}

impl<S: State> BeliefState<S> {
    pub fn new(members: impl IntoIterator<Item = S>) -> Result<Self, DomainError> {
        let mut members: Vec<S> = members.into_iter().collect();
        if members.is_empty() {
            return Err(DomainError::EmptyBelief);
        }
        members.sort();
        members.dedup();
        Ok(BeliefState { members })
    }

    pub fn members(&self) -> &[S] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl<S: fmt::Display> fmt::Display for BeliefState<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

impl<S: State> State for BeliefState<S> {
    /// Member encodings with 0x00 escaped as 0x00 0x01, each terminated by
    /// 0x00 0x00. This keeps the byte order equal to the set order.
    fn encode(&self) -> Vec<u8> {
        let mut bytes = Vec::new();
        for s in &self.members {
            for b in s.encode() {
                bytes.push(b);
                if b == 0 {
                    bytes.push(1);
                }
            }
            bytes.extend([0, 0]);
        }
        bytes
    }
}

/// Sensorless search over sets of base states. An action applies when it
/// applies in every member; results are member-wise images.
#[derive(Clone, Debug)]
pub struct Belief<P: Problem> {
    base: P,
    initial: BeliefState<P::State>,
}

pub fn belief_wrap<P: Problem>(
    base: P,
    initial: impl IntoIterator<Item = P::State>,
) -> Result<Belief<P>, DomainError> {
    Ok(Belief {
        base,
        initial: BeliefState::new(initial)?,
    })
}

impl<P: Problem> Belief<P> {
    pub fn base(&self) -> &P {
        &self.base
    }
}

impl<P: Problem> Problem for Belief<P> {
    type State = BeliefState<P::State>;
    type Action = P::Action;

    fn initial(&self) -> Self::State {
        self.initial.clone()
    }

    fn actions(&self, belief: &Self::State) -> Vec<P::Action> {
        let (first, rest) = belief
            .members
            .split_first()
            .expect("belief states are non-empty");
        let mut actions = self.base.actions(first);
        for s in rest {
            let here = self.base.actions(s);
            actions.retain(|a| here.contains(a));
        }
        actions
    }

    fn result(&self, belief: &Self::State, action: &P::Action) -> Self::State {
        BeliefState::new(belief.members.iter().map(|s| self.base.result(s, action)))
            .expect("image of a non-empty set is non-empty")
    }

    fn is_goal(&self, belief: &Self::State) -> bool {
        belief.members.iter().all(|s| self.base.is_goal(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{Boundary, VacuumAction, VacuumState, VacuumWorld};

    fn st(s: &str) -> VacuumState {
        VacuumState::parse(2, s).unwrap()
    }

    fn world() -> VacuumWorld {
        VacuumWorld::new(2, st("L,1,1"), Boundary::Stay).unwrap()
    }

    #[test]
    fn image_collapses() {
        let b = belief_wrap(world(), [st("L,1,1"), st("R,1,1")]).unwrap();
        let next = b.result(&b.initial(), &VacuumAction::Right);
        assert_eq!(next.members(), &[st("R,1,1")]);
    }

    #[test]
    fn goal_needs_every_member_clean() {
        let b = belief_wrap(world(), [st("L,0,0")]).unwrap();
        assert!(b.is_goal(&BeliefState::new([st("L,0,0")]).unwrap()));
        assert!(!b.is_goal(&BeliefState::new([st("L,0,0"), st("R,1,0")]).unwrap()));
    }

    #[test]
    fn empty_belief_rejected() {
        assert_eq!(
            belief_wrap(world(), Vec::<VacuumState>::new()).unwrap_err(),
            DomainError::EmptyBelief
        );
    }

    #[test]
    fn blocked_moves_are_not_applicable_to_mixed_positions() {
        let blocked = VacuumWorld::new(2, st("L,1,1"), Boundary::Blocked).unwrap();
        let b = belief_wrap(blocked, [st("L,1,1"), st("R,1,1")]).unwrap();
        assert_eq!(b.actions(&b.initial()), vec![VacuumAction::Suck]);
    }

    #[test]
    fn encoding_preserves_order() {
        let w = world();
        let all = w.all_states();
        let beliefs: Vec<_> = (1..all.len())
            .flat_map(|i| {
                [
                    BeliefState::new(all[..i].to_vec()).unwrap(),
                    BeliefState::new(all[i..].to_vec()).unwrap(),
                    BeliefState::new([all[i].clone()]).unwrap(),
                ]
            })
            .collect();
        for a in &beliefs {
            for b in &beliefs {
                assert_eq!(a.cmp(b), a.encode().cmp(&b.encode()), "{a} vs {b}");
            }
        }
    }
}

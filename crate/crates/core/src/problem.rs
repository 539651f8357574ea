//! The five-component problem model and the path type shared by every search.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::cost::Cost;
use crate::search::SearchError;

/// A domain state.
///
/// `encode` must be injective, and the derived `Ord` must agree with the
/// lexicographic order of the encodings. Canonical orbit representatives and
/// search tie-breaking both rely on that order.
pub trait State: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display {
    fn encode(&self) -> Vec<u8>;
}

/// A domain action label. `Display` is the canonical rendering.
pub trait Action: Clone + Eq + Hash + fmt::Debug + fmt::Display {}

impl<T: Clone + Eq + Hash + fmt::Debug + fmt::Display> Action for T {}

/// A search problem: initial state, successor generation, goal test, step
/// cost and optional action inverses.
///
/// `result` is only defined for actions returned by `actions` for the same
/// state. Implementations are immutable once built, so one problem can be
/// searched from several threads at once.
pub trait Problem {
    type State: State;
    type Action: Action;

    fn initial(&self) -> Self::State;

    /// Applicable actions in the domain's declared order.
    fn actions(&self, state: &Self::State) -> Vec<Self::Action>;

    fn result(&self, state: &Self::State, action: &Self::Action) -> Self::State;

    fn is_goal(&self, state: &Self::State) -> bool;

    fn step_cost(&self, _from: &Self::State, _action: &Self::Action, _to: &Self::State) -> Cost {
        Cost::ONE
    }

    /// If `Some(b)`, then for every state `s` where `a` applies, `b` applies in
    /// `result(s, a)` and leads back to `s`.
    fn inverse(&self, _action: &Self::Action) -> Option<Self::Action> {
        None
    }

    /// The complete finite goal set, when the domain can list it.
    fn goal_states(&self) -> Option<Vec<Self::State>> {
        None
    }

    /// `(action, successor)` pairs in action order.
    fn successors(&self, state: &Self::State) -> Vec<(Self::Action, Self::State)> {
        self.actions(state)
            .into_iter()
            .map(|a| {
                let next = self.result(state, &a);
                (a, next)
            })
            .collect()
    }
}

impl<P: Problem + ?Sized> Problem for &P {
    type State = P::State;
    type Action = P::Action;

    fn initial(&self) -> Self::State {
        (**self).initial()
    }
    fn actions(&self, state: &Self::State) -> Vec<Self::Action> {
        (**self).actions(state)
    }
    fn result(&self, state: &Self::State, action: &Self::Action) -> Self::State {
        (**self).result(state, action)
    }
    fn is_goal(&self, state: &Self::State) -> bool {
        (**self).is_goal(state)
    }
    fn step_cost(&self, from: &Self::State, action: &Self::Action, to: &Self::State) -> Cost {
        (**self).step_cost(from, action, to)
    }
    fn inverse(&self, action: &Self::Action) -> Option<Self::Action> {
        (**self).inverse(action)
    }
    fn goal_states(&self) -> Option<Vec<Self::State>> {
        (**self).goal_states()
    }
}

/// A start state followed by `(action, state)` steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path<S, A> {
    pub start: S,
    pub steps: Vec<(A, S)>,
    pub total_cost: Cost,
}

impl<S: Clone, A: Clone> Path<S, A> {
    pub fn empty(start: S) -> Self {
        Path {
            start,
            steps: Vec::new(),
            total_cost: Cost::ZERO,
        }
    }

    /// Number of actions.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn actions(&self) -> impl Iterator<Item = &A> {
        self.steps.iter().map(|(a, _)| a)
    }

    pub fn states(&self) -> impl Iterator<Item = &S> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|(_, s)| s))
    }

    pub fn last_state(&self) -> &S {
        self.steps.last().map(|(_, s)| s).unwrap_or(&self.start)
    }

    /// Builds a path by replaying `actions` from `start`, summing step costs.
    pub fn replay<P>(problem: &P, start: S, actions: impl IntoIterator<Item = A>) -> Self
    where
        P: Problem<State = S, Action = A>,
    {
        let mut path = Path::empty(start);
        let mut current = path.start.clone();
        for action in actions {
            let next = problem.result(&current, &action);
            path.total_cost = path.total_cost + problem.step_cost(&current, &action, &next);
            path.steps.push((action, next.clone()));
            current = next;
        }
        path
    }
}

/// First reason a path fails to be a solution.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PathViolation {
    #[error("path starts at {found}, problem starts at {expected}")]
    WrongStart { expected: String, found: String },
    #[error("step {index}: action {action} is not applicable in {state}")]
    IllegalAction {
        index: usize,
        action: String,
        state: String,
    },
    #[error("step {index}: action {action} leads to {actual}, path lists {listed}")]
    WrongState {
        index: usize,
        action: String,
        actual: String,
        listed: String,
    },
    #[error("final state {0} is not a goal")]
    NotGoal(String),
    #[error("path claims cost {claimed}, steps sum to {actual}")]
    CostMismatch { claimed: Cost, actual: Cost },
}

/// Checks that `path` is a solution of `problem`: it starts at the initial
/// state, every step is legal and replays exactly, it ends in a goal, and its
/// total cost equals the sum of its step costs.
pub fn validate_path<P: Problem>(
    problem: &P,
    path: &Path<P::State, P::Action>,
) -> Result<(), PathViolation> {
    let initial = problem.initial();
    if path.start != initial {
        return Err(PathViolation::WrongStart {
            expected: initial.to_string(),
            found: path.start.to_string(),
        });
    }
    let mut current = initial;
    let mut cost = Cost::ZERO;
    for (index, (action, listed)) in path.steps.iter().enumerate() {
        if !problem.actions(&current).contains(action) {
            return Err(PathViolation::IllegalAction {
                index,
                action: action.to_string(),
                state: current.to_string(),
            });
        }
        let next = problem.result(&current, action);
        if &next != listed {
            return Err(PathViolation::WrongState {
                index,
                action: action.to_string(),
                actual: next.to_string(),
                listed: listed.to_string(),
            });
        }
        cost = cost + problem.step_cost(&current, action, &next);
        current = next;
    }
    if !problem.is_goal(&current) {
        return Err(PathViolation::NotGoal(current.to_string()));
    }
    if cost != path.total_cost {
        return Err(PathViolation::CostMismatch {
            claimed: path.total_cost,
            actual: cost,
        });
    }
    Ok(())
}

/// Breadth-first closure of the initial state, in discovery order.
///
/// Fails with `ResourceLimit` once more than `cap` distinct states are found.
pub fn enumerate_reachable<P: Problem>(
    problem: &P,
    cap: usize,
) -> Result<Vec<P::State>, SearchError> {
    let initial = problem.initial();
    let mut seen = HashSet::from([initial.clone()]);
    let mut order = vec![initial.clone()];
    let mut queue = VecDeque::from([initial]);
    if order.len() > cap {
        return Err(SearchError::ResourceLimit { cap });
    }
    while let Some(state) = queue.pop_front() {
        for (_, next) in problem.successors(&state) {
            if seen.insert(next.clone()) {
                if order.len() == cap {
                    return Err(SearchError::ResourceLimit { cap });
                }
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(order)
}

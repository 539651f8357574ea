use super::{check_automorphism, GoalCondition, GroupElement, SymmetryGroup};
use crate::cost::Cost;
use crate::problem::{Path, Problem};
use crate::search::SearchError;

/// Search over canonical orbit representatives of `base`.
///
/// States are canonical representatives; successors are canonicalized base
/// successors. The group's canonicalizing elements can be recovered per edge
/// with [`Quotient::bookkeeping`] and used to lift a quotient solution back to
/// the base problem.
#[derive(Clone, Debug)]
pub struct Quotient<P: Problem> {
    base: P,
    group: SymmetryGroup<P::State, P::Action>,
}

/// Per-edge canonicalizing elements for one quotient path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBookkeeping {
    /// Maps the base initial state onto the quotient initial state.
    pub initial: GroupElement,
    /// Entry `i` maps the raw base successor of step `i` onto the canonical
    /// state listed in the quotient path.
    pub edges: Vec<GroupElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("inconsistent quotient bookkeeping: {0}")]
pub struct LiftError(pub String);

/// Builds the quotient of `base` under `group` after checking every generator
/// exhaustively, goal-set closure included.
pub fn quotient<P: Problem>(
    base: P,
    group: SymmetryGroup<P::State, P::Action>,
    cap: usize,
) -> Result<Quotient<P>, SearchError> {
    for generator in group.generators() {
        let report = check_automorphism(&base, generator, GoalCondition::Preserved, cap)?;
        if let Some(violation) = report.violation {
            return Err(SearchError::InvalidSymmetry(format!(
                "{}: {violation}",
                generator.name()
            )));
        }
    }
    Ok(Quotient { base, group })
}

impl<P: Problem> Quotient<P> {
    pub fn base(&self) -> &P {
        &self.base
    }

    pub fn group(&self) -> &SymmetryGroup<P::State, P::Action> {
        &self.group
    }

    /// Recomputes the canonicalizing element for every edge of `qpath`.
    pub fn bookkeeping(&self, qpath: &Path<P::State, P::Action>) -> QuotientBookkeeping {
        let (_, initial) = self.group.canonicalize(&self.base.initial());
        let mut edges = Vec::with_capacity(qpath.len());
        let mut current = &qpath.start;
        for (action, state) in &qpath.steps {
            let (_, element) = self.group.canonicalize(&self.base.result(current, action));
            edges.push(element);
            current = state;
        }
        QuotientBookkeeping { initial, edges }
    }

    /// Turns a path found in the quotient into a base-problem path from the
    /// true initial state.
    pub fn lift_path(
        &self,
        qpath: &Path<P::State, P::Action>,
        bookkeeping: &QuotientBookkeeping,
    ) -> Result<Path<P::State, P::Action>, LiftError> {
        if bookkeeping.edges.len() != qpath.len() {
            return Err(LiftError(format!(
                "{} edge entries for a path of {} steps",
                bookkeeping.edges.len(),
                qpath.len()
            )));
        }
        let apply = |element: &GroupElement, state: &P::State| {
            self.group
                .try_apply_state(element, state)
                .ok_or_else(|| LiftError("generator is not a permutation".into()))
        };

        // `to_base` maps the current quotient state onto the current base state.
        let mut to_base = bookkeeping.initial.inverse();
        let mut current = self.base.initial();
        if apply(&to_base, &qpath.start)? != current {
            return Err(LiftError(format!(
                "quotient path starts at {}, which is not canonical for {}",
                qpath.start, current
            )));
        }

        let mut lifted = Path::empty(current.clone());
        for (i, ((action, qstate), element)) in
            qpath.steps.iter().zip(&bookkeeping.edges).enumerate()
        {
            let base_action = self
                .group
                .try_apply_action(&to_base, action)
                .ok_or_else(|| LiftError("action map is not a permutation".into()))?;
            if !self.base.actions(&current).contains(&base_action) {
                return Err(LiftError(format!(
                    "step {i}: lifted action {base_action} does not apply in {current}"
                )));
            }
            let next = self.base.result(&current, &base_action);
            to_base = element.inverse().then(&to_base);
            if apply(&to_base, qstate)? != next {
                return Err(LiftError(format!(
                    "step {i}: {qstate} does not lift to {next}"
                )));
            }
            lifted.total_cost =
                lifted.total_cost + self.base.step_cost(&current, &base_action, &next);
            lifted.steps.push((base_action, next.clone()));
            current = next;
        }
        Ok(lifted)
    }

    /// [`Quotient::lift_path`] with freshly computed bookkeeping.
    pub fn lift(
        &self,
        qpath: &Path<P::State, P::Action>,
    ) -> Result<Path<P::State, P::Action>, LiftError> {
        self.lift_path(qpath, &self.bookkeeping(qpath))
    }
}

impl<P: Problem> Problem for Quotient<P> {
    type State = P::State;
    type Action = P::Action;

    fn initial(&self) -> Self::State {
        self.group.canonical(&self.base.initial())
    }

    fn actions(&self, state: &Self::State) -> Vec<Self::Action> {
        self.base.actions(state)
    }

    fn result(&self, state: &Self::State, action: &Self::Action) -> Self::State {
        self.group.canonical(&self.base.result(state, action))
    }

    fn is_goal(&self, state: &Self::State) -> bool {
        self.base.is_goal(state)
    }

    fn step_cost(&self, from: &Self::State, action: &Self::Action, _to: &Self::State) -> Cost {
        let raw = self.base.result(from, action);
        self.base.step_cost(from, action, &raw)
    }

    fn goal_states(&self) -> Option<Vec<Self::State>> {
        let mut goals: Vec<_> = self
            .base
            .goal_states()?
            .iter()
            .map(|g| self.group.canonical(g))
            .collect();
        goals.sort();
        goals.dedup();
        Some(goals)
    }
}

use std::collections::{HashMap, HashSet};

use super::Automorphism;
use crate::problem::{enumerate_reachable, Problem};
use crate::search::SearchError;

/// Which relation between the map and the goal set is required.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoalCondition {
    /// `is_goal(s) == is_goal(map(s))` on every reachable state. Needed for
    /// quotient search.
    Preserved,
    /// The map sends the initial state to a goal. Needed for mirror search,
    /// where the goal set is generally not closed under the map.
    InitialToGoal,
}

/// First counterexample found by [`check_automorphism`], rendered.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AutomorphismViolation {
    #[error("image {image} of {state} is not a reachable state")]
    ImageUnreachable { state: String, image: String },
    #[error("{first} and {second} both map to {image}")]
    NotInjective {
        first: String,
        second: String,
        image: String,
    },
    #[error("map is claimed to be an involution but sends {state} -> {image} -> {back}")]
    NotInvolution {
        state: String,
        image: String,
        back: String,
    },
    #[error("goal status differs between {state} and its image {image}")]
    GoalNotPreserved { state: String, image: String },
    #[error("initial state {initial} maps to {image}, which is not a goal")]
    InitialNotMappedToGoal { initial: String, image: String },
    #[error("action {action} applies in {state} but {mapped} does not apply in {image}")]
    ActionNotApplicable {
        state: String,
        action: String,
        image: String,
        mapped: String,
    },
    #[error("map({state} --{action}--> {next}) should be {expected}, but {image} --{mapped}--> {actual}")]
    DoesNotCommute {
        state: String,
        action: String,
        next: String,
        image: String,
        mapped: String,
        expected: String,
        actual: String,
    },
    #[error("step cost of {state} --{action}--> differs from its image")]
    CostNotPreserved { state: String, action: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismReport {
    pub states_checked: usize,
    pub transitions_checked: usize,
    pub violation: Option<AutomorphismViolation>,
}

impl AutomorphismReport {
    pub fn passes(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustively checks `map` against every reachable state and transition of
/// `problem`: bijective on the reachable set, commuting with `result`,
/// cost-preserving, involutive if claimed, and satisfying `goals`.
pub fn check_automorphism<P: Problem>(
    problem: &P,
    map: &Automorphism<P::State, P::Action>,
    goals: GoalCondition,
    cap: usize,
) -> Result<AutomorphismReport, SearchError> {
    let reachable = enumerate_reachable(problem, cap)?;
    let members: HashSet<_> = reachable.iter().cloned().collect();
    let mut report = AutomorphismReport {
        states_checked: 0,
        transitions_checked: 0,
        violation: None,
    };
    let mut preimage = HashMap::new();

    for state in &reachable {
        report.states_checked += 1;
        let image = map.apply_state(state);
        if !members.contains(&image) {
            report.violation = Some(AutomorphismViolation::ImageUnreachable {
                state: state.to_string(),
                image: image.to_string(),
            });
            return Ok(report);
        }
        if let Some(first) = preimage.insert(image.clone(), state.clone()) {
            report.violation = Some(AutomorphismViolation::NotInjective {
                first: first.to_string(),
                second: state.to_string(),
                image: image.to_string(),
            });
            return Ok(report);
        }
        if map.is_involution() {
            let back = map.apply_state(&image);
            if &back != state {
                report.violation = Some(AutomorphismViolation::NotInvolution {
                    state: state.to_string(),
                    image: image.to_string(),
                    back: back.to_string(),
                });
                return Ok(report);
            }
        }
        if goals == GoalCondition::Preserved && problem.is_goal(state) != problem.is_goal(&image) {
            report.violation = Some(AutomorphismViolation::GoalNotPreserved {
                state: state.to_string(),
                image: image.to_string(),
            });
            return Ok(report);
        }

        let image_actions = problem.actions(&image);
        for (action, next) in problem.successors(state) {
            report.transitions_checked += 1;
            let mapped = map.apply_action(&action);
            if !image_actions.contains(&mapped) {
                report.violation = Some(AutomorphismViolation::ActionNotApplicable {
                    state: state.to_string(),
                    action: action.to_string(),
                    image: image.to_string(),
                    mapped: mapped.to_string(),
                });
                return Ok(report);
            }
            let expected = map.apply_state(&next);
            let actual = problem.result(&image, &mapped);
            if expected != actual {
                report.violation = Some(AutomorphismViolation::DoesNotCommute {
                    state: state.to_string(),
                    action: action.to_string(),
                    next: next.to_string(),
                    image: image.to_string(),
                    mapped: mapped.to_string(),
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                });
                return Ok(report);
            }
            if problem.step_cost(state, &action, &next)
                != problem.step_cost(&image, &mapped, &actual)
            {
                report.violation = Some(AutomorphismViolation::CostNotPreserved {
                    state: state.to_string(),
                    action: action.to_string(),
                });
                return Ok(report);
            }
        }
    }
    if goals == GoalCondition::InitialToGoal {
        let initial = problem.initial();
        let image = map.apply_state(&initial);
        if !problem.is_goal(&image) {
            report.violation = Some(AutomorphismViolation::InitialNotMappedToGoal {
                initial: initial.to_string(),
                image: image.to_string(),
            });
            return Ok(report);
        }
    }
    Ok(report)
}

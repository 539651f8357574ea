use std::collections::HashMap;
use std::time::Instant;

use super::Automorphism;
use crate::problem::{Path, Problem};
use crate::search::{Outcome, SearchConfig, SearchError, SearchMetrics, SearchResult, SearchTree};

#[derive(Clone, Copy)]
enum Meeting {
    /// A goal generated directly.
    Goal(usize),
    /// `state` and its mirror image `mirror` both reached from the initial state.
    Mirror { state: usize, mirror: usize },
}

/// Meet-in-the-middle search using one forward frontier and an involutive
/// mirror that maps the initial state onto a goal.
///
/// Whenever a newly generated state `s` has a mirror image that was already
/// reached, a full solution is stitched together: the forward path to `s`,
/// followed by the mirror image of the forward path to `mirror(s)`, reversed
/// and replayed through action inverses. That tail runs from `s` to
/// `mirror(initial)`. Layers are generated until twice the current depth
/// reaches the best stitched length, which gives a minimum-length solution
/// when `mirror(initial)` is the only goal and costs are unit.
pub fn mirror_meet<P: Problem>(
    problem: &P,
    mirror: &Automorphism<P::State, P::Action>,
    config: &SearchConfig,
) -> Result<SearchResult<P::State, P::Action>, SearchError> {
    let started = Instant::now();
    let mut metrics = SearchMetrics::default();
    let initial = problem.initial();

    if !mirror.is_involution() {
        return Err(SearchError::PreconditionFailed(format!(
            "mirror {} is not an involution",
            mirror.name()
        )));
    }
    let mirrored_initial = mirror.apply_state(&initial);
    if mirror.apply_state(&mirrored_initial) != initial {
        return Err(SearchError::PreconditionFailed(format!(
            "mirror {} does not fix {initial} after two applications",
            mirror.name()
        )));
    }
    if !problem.is_goal(&mirrored_initial) {
        return Err(SearchError::PreconditionFailed(format!(
            "mirror image {mirrored_initial} of the initial state is not a goal"
        )));
    }
    let finish = |outcome, mut metrics: SearchMetrics| {
        metrics.wall_time = started.elapsed();
        Ok(SearchResult { outcome, metrics })
    };
    if problem.is_goal(&initial) {
        return finish(Outcome::Found(Path::empty(initial)), metrics);
    }

    let inverse = |action: &P::Action| {
        problem.inverse(action).ok_or_else(|| {
            SearchError::PreconditionFailed(format!("action {action} has no inverse"))
        })
    };

    let mut tree = SearchTree::new(initial.clone());
    let mut index = HashMap::from([(initial, 0usize)]);
    let mut layer = vec![0usize];
    let mut depth = 0usize;
    let mut best: Option<(usize, Meeting)> = None;
    let offer = |best: &mut Option<(usize, Meeting)>, len: usize, meeting: Meeting| {
        if best.is_none_or(|(b, _)| len < b) {
            *best = Some((len, meeting));
        }
    };
    metrics.observe_frontier(1);

    while !layer.is_empty() && !best.is_some_and(|(len, _)| len <= 2 * depth) {
        let mut next_layer = Vec::new();
        for &idx in &layer {
            metrics.nodes_expanded += 1;
            let state = tree.state(idx).clone();
            for (action, next) in problem.successors(&state) {
                inverse(&action)?;
                metrics.nodes_generated += 1;
                if index.contains_key(&next) {
                    continue;
                }
                if index.len() >= config.node_cap {
                    return Err(SearchError::ResourceLimit {
                        cap: config.node_cap,
                    });
                }
                let image = mirror.apply_state(&next);
                let goal = problem.is_goal(&next);
                let child = tree.push(next.clone(), idx, action);
                index.insert(next, child);
                next_layer.push(child);
                if goal {
                    offer(&mut best, depth + 1, Meeting::Goal(child));
                }
                if let Some(&other) = index.get(&image) {
                    let len = tree.depth(child) + tree.depth(other);
                    offer(
                        &mut best,
                        len,
                        Meeting::Mirror {
                            state: child,
                            mirror: other,
                        },
                    );
                }
            }
        }
        layer = next_layer;
        depth += 1;
        metrics.observe_frontier(layer.len());
    }

    let Some((_, meeting)) = best else {
        return finish(Outcome::NoSolution, metrics);
    };
    let actions = match meeting {
        Meeting::Goal(idx) => tree.actions_to(idx),
        Meeting::Mirror {
            state,
            mirror: other,
        } => {
            let mut actions = tree.actions_to(state);
            let tail = tree.actions_to(other);
            for action in tail.iter().rev() {
                actions.push(inverse(&mirror.apply_action(action))?);
            }
            actions
        }
    };
    let path = Path::replay(problem, problem.initial(), actions);
    finish(Outcome::Found(path), metrics)
}

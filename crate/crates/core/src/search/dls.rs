use std::collections::{HashMap, HashSet};
use std::time::Instant;

use super::{Outcome, SearchConfig, SearchError, SearchMetrics, SearchResult};
use crate::problem::{Path, Problem};

struct Frame<S, A> {
    via: Option<A>,
    remaining: usize,
    successors: Vec<(A, S)>,
    next: usize,
}

/// Depth-first search bounded to paths of at most `limit` actions.
///
/// A transposition table remembers the largest remaining depth each state has
/// been explored with, so a state is only re-entered when it is reached with
/// more depth to spare. This keeps the search complete within the limit
/// without exploring the full tree. The result is `Cutoff` exactly when some
/// reachable state lies beyond the limit and no solution was found.
pub fn depth_limited<P: Problem>(
    problem: &P,
    limit: usize,
    config: &SearchConfig,
) -> Result<SearchResult<P::State, P::Action>, SearchError> {
    let started = Instant::now();
    let mut metrics = SearchMetrics::default();
    let initial = problem.initial();
    let finish = |outcome, mut metrics: SearchMetrics| {
        metrics.wall_time = started.elapsed();
        Ok(SearchResult { outcome, metrics })
    };

    if problem.is_goal(&initial) {
        return finish(Outcome::Found(Path::empty(initial)), metrics);
    }

    let mut depth_left: HashMap<P::State, usize> = HashMap::from([(initial.clone(), limit)]);
    let mut beyond: HashSet<P::State> = HashSet::new();
    let mut stack = Vec::new();

    let enter = |state: P::State,
                 via: Option<P::Action>,
                 remaining: usize,
                 metrics: &mut SearchMetrics,
                 beyond: &mut HashSet<P::State>| {
        let successors = if remaining == 0 {
            beyond.extend(problem.successors(&state).into_iter().map(|(_, s)| s));
            Vec::new()
        } else {
            metrics.nodes_expanded += 1;
            let succ = problem.successors(&state);
            metrics.nodes_generated += succ.len() as u64;
            succ
        };
        Frame {
            via,
            remaining,
            successors,
            next: 0,
        }
    };

    stack.push(enter(
        initial.clone(),
        None,
        limit,
        &mut metrics,
        &mut beyond,
    ));
    metrics.observe_frontier(stack.len());

    while let Some(top) = stack.last_mut() {
        if top.next == top.successors.len() {
            stack.pop();
            continue;
        }
        let (action, next) = top.successors[top.next].clone();
        top.next += 1;
        let remaining = top.remaining - 1;

        if problem.is_goal(&next) {
            let actions = stack
                .iter()
                .filter_map(|f| f.via.clone())
                .chain(std::iter::once(action));
            let path = Path::replay(problem, initial, actions);
            return finish(Outcome::Found(path), metrics);
        }
        match depth_left.get(&next) {
            Some(seen) if *seen >= remaining => continue,
            Some(_) => {}
            None if depth_left.len() >= config.node_cap => {
                return Err(SearchError::ResourceLimit {
                    cap: config.node_cap,
                })
            }
            None => {}
        }
        depth_left.insert(next.clone(), remaining);
        let frame = enter(next, Some(action), remaining, &mut metrics, &mut beyond);
        stack.push(frame);
        metrics.observe_frontier(stack.len());
    }

    let truncated = beyond.iter().any(|s| !depth_left.contains_key(s));
    let outcome = if truncated {
        Outcome::Cutoff
    } else {
        Outcome::NoSolution
    };
    finish(outcome, metrics)
}

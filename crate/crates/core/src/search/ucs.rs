use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::time::Instant;

use super::{Outcome, SearchConfig, SearchError, SearchMetrics, SearchResult, SearchTree};
use crate::cost::Cost;
use crate::problem::Problem;

/// Uniform-cost graph search. The frontier is ordered by path cost, then by
/// state order, then by discovery order; goals are tested on expansion.
pub fn uniform_cost<P: Problem>(
    problem: &P,
    config: &SearchConfig,
) -> Result<SearchResult<P::State, P::Action>, SearchError> {
    let started = Instant::now();
    let mut metrics = SearchMetrics::default();
    let initial = problem.initial();

    let mut tree = SearchTree::new(initial.clone());
    let mut best: HashMap<P::State, Cost> = HashMap::from([(initial.clone(), Cost::ZERO)]);
    let mut closed = HashSet::new();
    let mut frontier = BinaryHeap::from([Reverse((Cost::ZERO, initial, 0usize))]);
    metrics.observe_frontier(1);

    while let Some(Reverse((cost, state, idx))) = frontier.pop() {
        if closed.contains(&state) || best.get(&state).is_some_and(|b| *b < cost) {
            continue;
        }
        if problem.is_goal(&state) {
            let path = tree.path_to(problem, idx);
            debug_assert_eq!(path.total_cost, cost);
            metrics.wall_time = started.elapsed();
            return Ok(SearchResult {
                outcome: Outcome::Found(path),
                metrics,
            });
        }
        metrics.nodes_expanded += 1;
        for (action, next) in problem.successors(&state) {
            metrics.nodes_generated += 1;
            if closed.contains(&next) {
                continue;
            }
            let next_cost = cost + problem.step_cost(&state, &action, &next);
            match best.get(&next) {
                Some(known) if *known <= next_cost => continue,
                Some(_) => {}
                None if best.len() >= config.node_cap => {
                    return Err(SearchError::ResourceLimit {
                        cap: config.node_cap,
                    })
                }
                None => {}
            }
            best.insert(next.clone(), next_cost);
            let child = tree.push(next.clone(), idx, action);
            frontier.push(Reverse((next_cost, next, child)));
        }
        closed.insert(state);
        metrics.observe_frontier(frontier.len());
    }
    metrics.wall_time = started.elapsed();
    Ok(SearchResult {
        outcome: Outcome::NoSolution,
        metrics,
    })
}

use std::collections::{HashSet, VecDeque};
use std::time::Instant;

use super::{Outcome, SearchConfig, SearchError, SearchMetrics, SearchResult, SearchTree};
use crate::problem::{Path, Problem};

/// Breadth-first graph search. Goals are tested when generated, so the first
/// goal found lies on a minimum-length path.
pub fn bfs<P: Problem>(
    problem: &P,
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

    let mut tree = SearchTree::new(initial.clone());
    let mut explored = HashSet::from([initial]);
    let mut frontier = VecDeque::from([0usize]);
    metrics.observe_frontier(1);

    while let Some(idx) = frontier.pop_front() {
        metrics.nodes_expanded += 1;
        for (action, next) in problem.successors(tree.state(idx)) {
            metrics.nodes_generated += 1;
            if explored.contains(&next) {
                continue;
            }
            if explored.len() >= config.node_cap {
                return Err(SearchError::ResourceLimit {
                    cap: config.node_cap,
                });
            }
            explored.insert(next.clone());
            let goal = problem.is_goal(&next);
            let child = tree.push(next, idx, action);
            if goal {
                let path = tree.path_to(problem, child);
                return finish(Outcome::Found(path), metrics);
            }
            frontier.push_back(child);
        }
        metrics.observe_frontier(frontier.len());
    }
    finish(Outcome::NoSolution, metrics)
}

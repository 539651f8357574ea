use std::collections::HashMap;
use std::time::Instant;

use super::{Outcome, SearchConfig, SearchError, SearchMetrics, SearchResult, SearchTree};
use crate::problem::{Path, Problem};

/// Backward node: `action` leads forward from this node's state to `toward`.
struct BackNode<S, A> {
    state: S,
    toward: Option<(usize, A)>,
    depth: usize,
}

fn inverse_of<P: Problem>(problem: &P, action: &P::Action) -> Result<P::Action, SearchError> {
    problem
        .inverse(action)
        .ok_or_else(|| SearchError::NotInvertible {
            action: action.to_string(),
        })
}

/// Layered bidirectional breadth-first search between the initial state and
/// the enumerated goal set.
///
/// The smaller frontier layer is expanded in full each round. Predecessors are
/// generated through declared action inverses, so every action met on either
/// side must have one. The search stops once the two completed depths add up
/// to at least the best meeting length, which makes the result minimum-length.
pub fn bidirectional_bfs<P: Problem>(
    problem: &P,
    config: &SearchConfig,
) -> Result<SearchResult<P::State, P::Action>, SearchError> {
    let started = Instant::now();
    let mut metrics = SearchMetrics::default();
    let initial = problem.initial();
    let mut goals = problem
        .goal_states()
        .ok_or(SearchError::NoGoalEnumeration)?;
    goals.sort();
    goals.dedup();
    let finish = |outcome, mut metrics: SearchMetrics| {
        metrics.wall_time = started.elapsed();
        Ok(SearchResult { outcome, metrics })
    };

    if problem.is_goal(&initial) {
        return finish(Outcome::Found(Path::empty(initial)), metrics);
    }
    let cap_error = || SearchError::ResourceLimit {
        cap: config.node_cap,
    };

    let mut fwd = SearchTree::new(initial.clone());
    let mut fwd_index = HashMap::from([(initial, 0usize)]);
    let mut fwd_layer = vec![0usize];

    let mut bwd: Vec<BackNode<P::State, P::Action>> = Vec::new();
    let mut bwd_index = HashMap::new();
    let mut bwd_layer = Vec::new();
    for goal in goals {
        if fwd_index.len() + bwd_index.len() >= config.node_cap {
            return Err(cap_error());
        }
        bwd_index.insert(goal.clone(), bwd.len());
        bwd_layer.push(bwd.len());
        bwd.push(BackNode {
            state: goal,
            toward: None,
            depth: 0,
        });
    }
    if bwd.is_empty() {
        return finish(Outcome::NoSolution, metrics);
    }

    let (mut fwd_depth, mut bwd_depth) = (0usize, 0usize);
    // (length, forward node, backward node)
    let mut best: Option<(usize, usize, usize)> = None;
    let offer = |best: &mut Option<(usize, usize, usize)>, candidate: (usize, usize, usize)| {
        if best.is_none_or(|b| candidate.0 < b.0) {
            *best = Some(candidate);
        }
    };
    metrics.observe_frontier(fwd_layer.len() + bwd_layer.len());

    loop {
        if best.is_some_and(|(len, _, _)| fwd_depth + bwd_depth >= len) {
            break;
        }
        if fwd_layer.is_empty() || bwd_layer.is_empty() {
            break;
        }
        if fwd_layer.len() <= bwd_layer.len() {
            let mut next_layer = Vec::new();
            for &idx in &fwd_layer {
                metrics.nodes_expanded += 1;
                let state = fwd.state(idx).clone();
                for (action, next) in problem.successors(&state) {
                    inverse_of(problem, &action)?;
                    metrics.nodes_generated += 1;
                    if fwd_index.contains_key(&next) {
                        continue;
                    }
                    if fwd_index.len() + bwd_index.len() >= config.node_cap {
                        return Err(cap_error());
                    }
                    let child = fwd.push(next.clone(), idx, action);
                    fwd_index.insert(next.clone(), child);
                    next_layer.push(child);
                    if let Some(&b) = bwd_index.get(&next) {
                        offer(&mut best, (fwd.depth(child) + bwd[b].depth, child, b));
                    }
                }
            }
            fwd_layer = next_layer;
            fwd_depth += 1;
        } else {
            let mut next_layer = Vec::new();
            for &idx in &bwd_layer {
                metrics.nodes_expanded += 1;
                let state = bwd[idx].state.clone();
                for back in problem.actions(&state) {
                    let forward = inverse_of(problem, &back)?;
                    let prev = problem.result(&state, &back);
                    metrics.nodes_generated += 1;
                    if bwd_index.contains_key(&prev) {
                        continue;
                    }
                    if fwd_index.len() + bwd_index.len() >= config.node_cap {
                        return Err(cap_error());
                    }
                    let node = bwd.len();
                    bwd.push(BackNode {
                        state: prev.clone(),
                        toward: Some((idx, forward)),
                        depth: bwd[idx].depth + 1,
                    });
                    bwd_index.insert(prev.clone(), node);
                    next_layer.push(node);
                    if let Some(&f) = fwd_index.get(&prev) {
                        offer(&mut best, (fwd.depth(f) + bwd[node].depth, f, node));
                    }
                }
            }
            bwd_layer = next_layer;
            bwd_depth += 1;
        }
        metrics.observe_frontier(fwd_layer.len() + bwd_layer.len());
    }

    let Some((_, f, mut b)) = best else {
        return finish(Outcome::NoSolution, metrics);
    };
    let mut actions = fwd.actions_to(f);
    while let Some((toward, action)) = &bwd[b].toward {
        actions.push(action.clone());
        b = *toward;
    }
    let path = Path::replay(problem, problem.initial(), actions);
    finish(Outcome::Found(path), metrics)
}

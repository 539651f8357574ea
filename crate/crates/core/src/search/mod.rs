//! Uninformed graph searches with effort accounting.
//!
//! Every search keeps an explored set keyed by state, breaks ties by the
//! domain's action order and then by state order, and stops with
//! [`SearchError::ResourceLimit`] once more than `node_cap` distinct states
//! have been stored.

mod bfs;
mod bidirectional;
mod dls;
mod ucs;

use std::fmt;
use std::time::Duration;

use crate::problem::{Path, Problem};

pub use bfs::bfs;
pub use bidirectional::bidirectional_bfs;
pub use dls::depth_limited;
pub use ucs::uniform_cost;

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_cap: DEFAULT_NODE_CAP,
        }
    }
}

/// Effort counters. `nodes_expanded` counts states taken off the frontier and
/// expanded; `nodes_generated` counts every successor produced, duplicates
/// included.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchMetrics {
    pub nodes_expanded: u64,
    pub nodes_generated: u64,
    pub max_frontier: usize,
    pub wall_time: Duration,
}

impl SearchMetrics {
    /// The deterministic part of the metrics.
    pub fn counters(&self) -> (u64, u64, usize) {
        (self.nodes_expanded, self.nodes_generated, self.max_frontier)
    }

    pub(crate) fn observe_frontier(&mut self, len: usize) {
        self.max_frontier = self.max_frontier.max(len);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<S, A> {
    Found(Path<S, A>),
    NoSolution,
    /// The depth limit truncated the search before a solution was found.
    Cutoff,
}

#[derive(Clone, Debug)]
pub struct SearchResult<S, A> {
    pub outcome: Outcome<S, A>,
    pub metrics: SearchMetrics,
}

impl<S, A> SearchResult<S, A> {
    pub fn path(&self) -> Option<&Path<S, A>> {
        match &self.outcome {
            Outcome::Found(p) => Some(p),
            _ => None,
        }
    }

    pub fn into_path(self) -> Option<Path<S, A>> {
        match self.outcome {
            Outcome::Found(p) => Some(p),
            _ => None,
        }
    }

    pub fn kind(&self) -> OutcomeKind {
        match self.outcome {
            Outcome::Found(_) => OutcomeKind::Found,
            Outcome::NoSolution => OutcomeKind::NoSolution,
            Outcome::Cutoff => OutcomeKind::Cutoff,
        }
    }
}

/// Outcome names as they appear in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum OutcomeKind {
    Found,
    NoSolution,
    Cutoff,
    /// The algorithm's preconditions did not hold for the problem.
    Inapplicable,
}

impl fmt::Display for OutcomeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OutcomeKind::Found => "Found",
            OutcomeKind::NoSolution => "NoSolution",
            OutcomeKind::Cutoff => "Cutoff",
            OutcomeKind::Inapplicable => "Inapplicable",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("node cap of {cap} states exceeded")]
    ResourceLimit { cap: usize },
    #[error("action {action} has no declared inverse")]
    NotInvertible { action: String },
    #[error("problem does not enumerate its goal states")]
    NoGoalEnumeration,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid symmetry: {0}")]
    InvalidSymmetry(String),
}

/// The baseline strategies selectable at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    BreadthFirst,
    UniformCost,
    DepthLimited(usize),
    Bidirectional,
}

impl Strategy {
    pub fn run<P: Problem>(
        self,
        problem: &P,
        config: &SearchConfig,
    ) -> Result<SearchResult<P::State, P::Action>, SearchError> {
        match self {
            Strategy::BreadthFirst => bfs(problem, config),
            Strategy::UniformCost => uniform_cost(problem, config),
            Strategy::DepthLimited(limit) => depth_limited(problem, limit, config),
            Strategy::Bidirectional => bidirectional_bfs(problem, config),
        }
    }
}

/// Parent-pointer arena shared by the forward searches.
pub(crate) struct SearchTree<S, A> {
    nodes: Vec<TreeNode<S, A>>,
}

struct TreeNode<S, A> {
    state: S,
    parent: Option<(usize, A)>,
    depth: usize,
}

impl<S: Clone, A: Clone> SearchTree<S, A> {
    pub(crate) fn new(root: S) -> Self {
        SearchTree {
            nodes: vec![TreeNode {
                state: root,
                parent: None,
                depth: 0,
            }],
        }
    }

    pub(crate) fn push(&mut self, state: S, parent: usize, action: A) -> usize {
        let depth = self.nodes[parent].depth + 1;
        self.nodes.push(TreeNode {
            state,
            parent: Some((parent, action)),
            depth,
        });
        self.nodes.len() - 1
    }

    pub(crate) fn state(&self, idx: usize) -> &S {
        &self.nodes[idx].state
    }

    pub(crate) fn depth(&self, idx: usize) -> usize {
        self.nodes[idx].depth
    }

    /// Actions from the root to `idx`.
    pub(crate) fn actions_to(&self, mut idx: usize) -> Vec<A> {
        let mut actions = Vec::with_capacity(self.nodes[idx].depth);
        while let Some((parent, action)) = &self.nodes[idx].parent {
            actions.push(action.clone());
            idx = *parent;
        }
        actions.reverse();
        actions
    }

    pub(crate) fn path_to<P>(&self, problem: &P, idx: usize) -> Path<S, A>
    where
        P: Problem<State = S, Action = A>,
    {
        Path::replay(problem, self.nodes[0].state.clone(), self.actions_to(idx))
    }
}

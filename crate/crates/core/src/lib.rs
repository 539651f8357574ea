//! Uninformed state-space search with symmetry reduction.
//!
//! Problems implement [`Problem`]: an initial state, ordered successor
//! generation, a goal test, exact step costs and optional action inverses.
//! On top of the baseline searches in [`search`], [`symmetry`] adds orbit
//! canonicalization, quotient search and a single-frontier mirror
//! meet-in-the-middle search. [`domains`] ships the vacuum world,
//! missionaries and cannibals and the towers of Hanoi, each with a mirror
//! symmetry, plus a sensorless belief-state wrapper.

pub mod agent;
pub mod cost;
pub mod domains;
pub mod explicit;
pub mod export;
pub mod problem;
pub mod search;
pub mod symmetry;

pub use cost::Cost;
pub use problem::{
    enumerate_reachable, validate_path, Action, Path, PathViolation, Problem, State,
};
pub use search::{
    bfs, bidirectional_bfs, depth_limited, uniform_cost, Outcome, SearchConfig, SearchError,
    SearchMetrics, SearchResult, Strategy,
};

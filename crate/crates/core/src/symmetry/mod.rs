//! State-space automorphisms, orbits and canonical representatives, plus the
//! two searches built on them: quotient search and mirror meet-in-the-middle.
//!
//! Group elements are kept as words over the generators. A generator's
//! inverse on a given state is found by walking that state's cycle, so
//! generators only need to be permutations, not involutions.

mod check;
mod mirror;
mod quotient;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::problem::State;

pub use check::{check_automorphism, AutomorphismReport, AutomorphismViolation, GoalCondition};
pub use mirror::mirror_meet;
pub use quotient::{quotient, LiftError, Quotient, QuotientBookkeeping};

type StateMap<S> = Arc<dyn Fn(&S) -> S + Send + Sync>;
type ActionMap<A> = Arc<dyn Fn(&A) -> A + Send + Sync>;

/// A relabeling of states and actions claimed to be a symmetry of a problem.
/// [`check_automorphism`] verifies the claim against a concrete problem.
pub struct Automorphism<S, A> {
    name: String,
    map_state: StateMap<S>,
    map_action: ActionMap<A>,
    involution: bool,
}

impl<S, A> Clone for Automorphism<S, A> {
    fn clone(&self) -> Self {
        Automorphism {
            name: self.name.clone(),
            map_state: Arc::clone(&self.map_state),
            map_action: Arc::clone(&self.map_action),
            involution: self.involution,
        }
    }
}

impl<S, A> fmt::Debug for Automorphism<S, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Automorphism")
            .field("name", &self.name)
            .field("involution", &self.involution)
            .finish_non_exhaustive()
    }
}

impl<S: Clone + 'static, A: Clone + 'static> Automorphism<S, A> {
    pub fn new(
        name: impl Into<String>,
        map_state: impl Fn(&S) -> S + Send + Sync + 'static,
        map_action: impl Fn(&A) -> A + Send + Sync + 'static,
        involution: bool,
    ) -> Self {
        Automorphism {
            name: name.into(),
            map_state: Arc::new(map_state),
            map_action: Arc::new(map_action),
            involution,
        }
    }

    pub fn identity() -> Self {
        Automorphism::new("id", S::clone, A::clone, true)
    }
}

impl<S, A> Automorphism<S, A> {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Whether the map claims to be its own inverse.
    pub fn is_involution(&self) -> bool {
        self.involution
    }

    pub fn apply_state(&self, state: &S) -> S {
        (self.map_state)(state)
    }

    pub fn apply_action(&self, action: &A) -> A {
        (self.map_action)(action)
    }
}

/// Upper bound on the cycle walk used to invert a generator on one point.
const MAX_CYCLE: usize = 1 << 16;

fn cycle_predecessor<T: Clone + PartialEq>(point: &T, step: impl Fn(&T) -> T) -> Option<T> {
    let mut prev = point.clone();
    for _ in 0..MAX_CYCLE {
        let next = step(&prev);
        if &next == point {
            return Some(prev);
        }
        prev = next;
    }
    None
}

/// A word over generators; each entry is `(generator index, inverted)`,
/// applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupElement {
    ops: Vec<(usize, bool)>,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement::default()
    }

    pub fn generator(index: usize) -> Self {
        GroupElement {
            ops: vec![(index, false)],
        }
    }

    pub fn inverse(&self) -> Self {
        GroupElement {
            ops: self.ops.iter().rev().map(|&(g, inv)| (g, !inv)).collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GroupElement) -> Self {
        let mut ops = self.ops.clone();
        ops.extend_from_slice(&next.ops);
        GroupElement { ops }
    }

    pub fn is_identity(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn word_len(&self) -> usize {
        self.ops.len()
    }
}

/// A finite group given by generators.
#[derive(Clone, Debug)]
pub struct SymmetryGroup<S, A> {
    generators: Vec<Automorphism<S, A>>,
}

impl<S, A> SymmetryGroup<S, A> {
    pub fn new(generators: Vec<Automorphism<S, A>>) -> Self {
        SymmetryGroup { generators }
    }

    /// The trivial group.
    pub fn identity() -> Self {
        SymmetryGroup {
            generators: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[Automorphism<S, A>] {
        &self.generators
    }
}

impl<S: State, A: Clone + PartialEq> SymmetryGroup<S, A> {
    /// Applies `element` to a state. `None` if an inverted generator fails to
    /// cycle back, which means it is not a permutation.
    pub fn try_apply_state(&self, element: &GroupElement, state: &S) -> Option<S> {
        let mut s = state.clone();
        for &(g, inv) in &element.ops {
            let gen = &self.generators[g];
            s = if !inv || gen.involution {
                gen.apply_state(&s)
            } else {
                cycle_predecessor(&s, |x| gen.apply_state(x))?
            };
        }
        Some(s)
    }

    pub fn try_apply_action(&self, element: &GroupElement, action: &A) -> Option<A> {
        let mut a = action.clone();
        for &(g, inv) in &element.ops {
            let gen = &self.generators[g];
            a = if !inv || gen.involution {
                gen.apply_action(&a)
            } else {
                cycle_predecessor(&a, |x| gen.apply_action(x))?
            };
        }
        Some(a)
    }

    /// Every orbit member paired with a word mapping `state` onto it, in
    /// breadth-first discovery order starting with `state` itself.
    pub fn orbit_with_elements(&self, state: &S) -> Vec<(S, GroupElement)> {
        let mut seen = HashSet::from([state.clone()]);
        let mut members = vec![(state.clone(), GroupElement::identity())];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (g, gen) in self.generators.iter().enumerate() {
                let image = gen.apply_state(&members[i].0);
                if seen.insert(image.clone()) {
                    let word = members[i].1.then(&GroupElement::generator(g));
                    members.push((image, word));
                    queue.push_back(members.len() - 1);
                }
            }
        }
        members
    }

    /// The closure of `{state}` under the generators.
    pub fn orbit(&self, state: &S) -> BTreeSet<S> {
        self.orbit_with_elements(state)
            .into_iter()
            .map(|(s, _)| s)
            .collect()
    }

    /// The orbit member with the smallest encoding, with a word mapping
    /// `state` onto it.
    pub fn canonicalize(&self, state: &S) -> (S, GroupElement) {
        self.orbit_with_elements(state)
            .into_iter()
            .min_by(|(a, _), (b, _)| a.encode().cmp(&b.encode()))
            .expect("orbit contains the state itself")
    }

    pub fn canonical(&self, state: &S) -> S {
        self.canonicalize(state).0
    }
}

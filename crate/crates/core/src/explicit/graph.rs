use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::ExplicitProblem;
use crate::cost::Cost;
use crate::problem::{Problem, State};
use crate::symmetry::{Automorphism, SymmetryGroup};

/// A named state of an explicit graph; ordered by name bytes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node(pub Arc<str>);

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl State for Node {
    fn encode(&self) -> Vec<u8> {
        self.0.as_bytes().to_vec()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Label(pub Arc<str>);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// [`ExplicitProblem`] as a searchable problem. Actions out of a state are
/// its edge labels in file order. A label is its own inverse when every edge
/// carrying it has a reverse edge with the same label and cost.
/// A named symmetry: state map and label map.
type SymMaps = (String, HashMap<Node, Node>, HashMap<Label, Label>);

#[derive(Clone, Debug)]
pub struct GraphProblem {
    initial: Node,
    goals: Vec<Node>,
    out: HashMap<Node, Vec<(Label, Node, Cost)>>,
    self_inverse: HashMap<Label, bool>,
    syms: Vec<SymMaps>,
}

fn node(s: &str) -> Node {
    Node(Arc::from(s))
}

fn label(s: &str) -> Label {
    Label(Arc::from(s))
}

impl GraphProblem {
    pub(super) fn new(p: &ExplicitProblem) -> Self {
        let mut out: HashMap<Node, Vec<(Label, Node, Cost)>> =
            p.states.iter().map(|s| (node(s), Vec::new())).collect();
        for e in &p.edges {
            out.entry(node(&e.from))
                .or_default()
                .push((label(&e.label), node(&e.to), e.cost));
        }
        let mut self_inverse: HashMap<Label, bool> = HashMap::new();
        for e in &p.edges {
            let reversed = p.edges.iter().any(|r| {
                r.from == e.to && r.to == e.from && r.label == e.label && r.cost == e.cost
            });
            *self_inverse.entry(label(&e.label)).or_insert(true) &= reversed;
        }
        let syms = p
            .syms
            .iter()
            .map(|s| {
                let states = s.states.iter().map(|(a, b)| (node(a), node(b))).collect();
                let actions = s
                    .actions
                    .iter()
                    .map(|(a, b)| (label(a), label(b)))
                    .collect();
                (s.name.clone(), states, actions)
            })
            .collect();
        GraphProblem {
            initial: node(&p.init),
            goals: p.goals.iter().map(|g| node(g)).collect(),
            out,
            self_inverse,
            syms,
        }
    }

    pub fn symmetry_names(&self) -> Vec<&str> {
        self.syms.iter().map(|(n, _, _)| n.as_str()).collect()
    }

    /// The declared symmetry `name`. It is marked involutive when applying it
    /// twice is the identity on every listed state and label.
    pub fn symmetry(&self, name: &str) -> Option<Automorphism<Node, Label>> {
        let (name, states, actions) = self.syms.iter().find(|(n, _, _)| n == name)?;
        let involution = states.iter().all(|(a, b)| states.get(b).unwrap_or(b) == a)
            && actions
                .iter()
                .all(|(a, b)| actions.get(b).unwrap_or(b) == a);
        let (states, actions) = (Arc::new(states.clone()), Arc::new(actions.clone()));
        Some(Automorphism::new(
            name.clone(),
            move |s: &Node| states.get(s).cloned().unwrap_or_else(|| s.clone()),
            move |a: &Label| actions.get(a).cloned().unwrap_or_else(|| a.clone()),
            involution,
        ))
    }

    /// All declared symmetries as generators.
    pub fn symmetry_group(&self) -> SymmetryGroup<Node, Label> {
        SymmetryGroup::new(
            self.symmetry_names()
                .into_iter()
                .filter_map(|n| self.symmetry(n))
                .collect(),
        )
    }

    fn edge(&self, state: &Node, action: &Label) -> Option<&(Label, Node, Cost)> {
        self.out.get(state)?.iter().find(|(l, _, _)| l == action)
    }
}

impl Problem for GraphProblem {
    type State = Node;
    type Action = Label;

    fn initial(&self) -> Node {
        self.initial.clone()
    }

    fn actions(&self, state: &Node) -> Vec<Label> {
        self.out
            .get(state)
            .map(|edges| edges.iter().map(|(l, _, _)| l.clone()).collect())
            .unwrap_or_default()
    }

    fn result(&self, state: &Node, action: &Label) -> Node {
        match self.edge(state, action) {
            Some((_, to, _)) => to.clone(),
            None => panic!("no `{action}` edge out of `{state}`"),
        }
    }

    fn is_goal(&self, state: &Node) -> bool {
        self.goals.contains(state)
    }

    fn step_cost(&self, from: &Node, action: &Label, _to: &Node) -> Cost {
        self.edge(from, action).map_or(Cost::ZERO, |(_, _, c)| *c)
    }

    fn inverse(&self, action: &Label) -> Option<Label> {
        self.self_inverse
            .get(action)
            .copied()
            .unwrap_or(false)
            .then(|| action.clone())
    }

    fn goal_states(&self) -> Option<Vec<Node>> {
        Some(self.goals.clone())
    }
}

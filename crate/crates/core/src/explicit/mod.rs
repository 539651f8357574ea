//! Explicit transition systems read from a line-oriented text format.
//!
//! ```text
//! # comment
//! state <name>
//! init <name>
//! goal <name>
//! edge <from> <label> <to> <cost>
//! sym <symname> <a>-><b> [<a2>-><b2> ...]
//! symact <symname> <l1>-><l2> [...]
//! ```
//!
//! Names match `[A-Za-z0-9_,()-]+`. Costs are decimal integers or `p/q`.

mod graph;
mod parse;

use std::fmt::Write as _;

use crate::cost::Cost;

pub use graph::{GraphProblem, Label, Node};
pub use parse::{parse_problem_file, ExplicitError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: String,
    pub label: String,
    pub to: String,
    pub cost: Cost,
}

/// A named permutation of states, optionally relabeling actions too.
/// Unlisted states and labels map to themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymDecl {
    pub name: String,
    pub states: Vec<(String, String)>,
    pub actions: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitProblem {
    pub states: Vec<String>,
    pub init: String,
    pub goals: Vec<String>,
    pub edges: Vec<Edge>,
    pub syms: Vec<SymDecl>,
}

impl ExplicitProblem {
    /// Renders the problem back to the file format. Parsing the output yields
    /// an equal value.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.states {
            writeln!(out, "state {s}").unwrap();
        }
        writeln!(out, "init {}", self.init).unwrap();
        for g in &self.goals {
            writeln!(out, "goal {g}").unwrap();
        }
        for e in &self.edges {
            writeln!(out, "edge {} {} {} {}", e.from, e.label, e.to, e.cost).unwrap();
        }
        for sym in &self.syms {
            write!(out, "sym {}", sym.name).unwrap();
            for (a, b) in &sym.states {
                write!(out, " {a}->{b}").unwrap();
            }
            out.push('\n');
            if !sym.actions.is_empty() {
                write!(out, "symact {}", sym.name).unwrap();
                for (a, b) in &sym.actions {
                    write!(out, " {a}->{b}").unwrap();
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn to_problem(&self) -> GraphProblem {
        GraphProblem::new(self)
    }
}

pub(crate) fn is_name(token: &str) -> bool {
    !token.is_empty()
        && token
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b',' | b'(' | b')' | b'-'))
}

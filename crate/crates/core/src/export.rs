//! DOT rendering of reachable state spaces and CSV/JSON metrics tables.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::cost::Cost;
use crate::problem::{enumerate_reachable, Problem, State};
use crate::search::{OutcomeKind, SearchError, SearchResult, DEFAULT_NODE_CAP};
use crate::symmetry::SymmetryGroup;

pub struct DotOptions<'a, S, A> {
    /// Fill nodes of the same orbit with the same color.
    pub orbit_colors: Option<&'a SymmetryGroup<S, A>>,
    pub node_cap: usize,
}

impl<S, A> Default for DotOptions<'_, S, A> {
    fn default() -> Self {
        DotOptions {
            orbit_colors: None,
            node_cap: DEFAULT_NODE_CAP,
        }
    }
}

const PALETTE: [&str; 12] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
    "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
];

fn orbit_color(index: usize) -> String {
    if let Some(c) = PALETTE.get(index) {
        return c.to_string();
    }
    // Golden-angle hue walk, fixed saturation and value.
    let hue = (index as f64 * 137.507_764) % 360.0;
    let (s, v) = (0.45, 0.95);
    let c = v * s;
    let x = c * (1.0 - ((hue / 60.0) % 2.0 - 1.0).abs());
    let (r, g, b) = match (hue / 60.0) as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = v - c;
    let byte = |f: f64| ((f + m) * 255.0).round() as u8;
    format!("#{:02x}{:02x}{:02x}", byte(r), byte(g), byte(b))
}

fn quoted(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for ch in text.chars() {
        if matches!(ch, '"' | '\\') {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// Renders the reachable state space as a DOT digraph.
///
/// Layout: a `digraph G {` line, one indented line per node in discovery
/// order, one indented line per edge grouped by source in discovery order and
/// action order, then `}`. Goal nodes get `peripheries=2`.
pub fn export_dot<P: Problem>(
    problem: &P,
    options: &DotOptions<'_, P::State, P::Action>,
) -> Result<String, SearchError> {
    let states = enumerate_reachable(problem, options.node_cap)?;
    let mut colors: HashMap<P::State, usize> = HashMap::new();
    if let Some(group) = options.orbit_colors {
        let mut orbit_index: HashMap<P::State, usize> = HashMap::new();
        for s in &states {
            let rep = group.canonical(s);
            let next = orbit_index.len();
            let idx = *orbit_index.entry(rep).or_insert(next);
            colors.insert(s.clone(), idx);
        }
    }

    let mut out = String::from("digraph G {\n");
    for s in &states {
        let mut attrs = Vec::new();
        if problem.is_goal(s) {
            attrs.push("peripheries=2".to_string());
        }
        if let Some(&idx) = colors.get(s) {
            attrs.push("style=filled".to_string());
            attrs.push(format!("fillcolor={}", quoted(&orbit_color(idx))));
        }
        if attrs.is_empty() {
            writeln!(out, "  {};", quoted(&s.to_string())).unwrap();
        } else {
            writeln!(out, "  {} [{}];", quoted(&s.to_string()), attrs.join(", ")).unwrap();
        }
    }
    for s in &states {
        for (a, t) in problem.successors(s) {
            writeln!(
                out,
                "  {} -> {} [label={}];",
                quoted(&s.to_string()),
                quoted(&t.to_string()),
                quoted(&a.to_string())
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// One row of a comparison table.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricsRow {
    pub label: String,
    pub outcome: OutcomeKind,
    pub cost: Option<Cost>,
    pub length: Option<usize>,
    pub nodes_expanded: u64,
    pub nodes_generated: u64,
    pub max_frontier: usize,
    pub wall_time_ms: f64,
}

impl MetricsRow {
    pub fn from_result<S: State, A: Clone>(
        label: impl Into<String>,
        result: &SearchResult<S, A>,
    ) -> Self {
        let path = result.path();
        MetricsRow {
            label: label.into(),
            outcome: result.kind(),
            cost: path.map(|p| p.total_cost),
            length: path.map(|p| p.len()),
            nodes_expanded: result.metrics.nodes_expanded,
            nodes_generated: result.metrics.nodes_generated,
            max_frontier: result.metrics.max_frontier,
            wall_time_ms: result.metrics.wall_time.as_secs_f64() * 1000.0,
        }
    }

    /// A row for an algorithm whose preconditions failed.
    pub fn inapplicable(label: impl Into<String>) -> Self {
        MetricsRow {
            label: label.into(),
            outcome: OutcomeKind::Inapplicable,
            cost: None,
            length: None,
            nodes_expanded: 0,
            nodes_generated: 0,
            max_frontier: 0,
            wall_time_ms: 0.0,
        }
    }

    pub fn without_timing(mut self) -> Self {
        self.wall_time_ms = 0.0;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricsFormat {
    Csv,
    Json,
}

pub const CSV_HEADER: [&str; 8] = [
    "label",
    "outcome",
    "cost",
    "length",
    "nodes_expanded",
    "nodes_generated",
    "max_frontier",
    "wall_time_ms",
];

/// Serializes rows in input order. Missing costs and lengths are empty CSV
/// cells and JSON nulls; wall time is printed with three decimals.
pub fn write_metrics(rows: &[MetricsRow], format: MetricsFormat) -> Vec<u8> {
    match format {
        MetricsFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).expect("in-memory write");
            for r in rows {
                w.write_record([
                    r.label.clone(),
                    r.outcome.to_string(),
                    r.cost.map(|c| c.to_string()).unwrap_or_default(),
                    r.length.map(|l| l.to_string()).unwrap_or_default(),
                    r.nodes_expanded.to_string(),
                    r.nodes_generated.to_string(),
                    r.max_frontier.to_string(),
                    format!("{:.3}", r.wall_time_ms),
                ])
                .expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
        MetricsFormat::Json => {
            let values: Vec<_> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "label": r.label,
                        "outcome": r.outcome,
                        "cost": r.cost.map(|c| c.to_string()),
                        "length": r.length,
                        "nodes_expanded": r.nodes_expanded,
                        "nodes_generated": r.nodes_generated,
                        "max_frontier": r.max_frontier,
                        "wall_time_ms": (r.wall_time_ms * 1000.0).round() / 1000.0,
                    })
                })
                .collect();
            let mut bytes = serde_json::to_vec_pretty(&values).expect("json values serialize");
            bytes.push(b'\n');
            bytes
        }
    }
}

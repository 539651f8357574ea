use std::collections::{HashMap, HashSet};

use super::{is_name, Edge, ExplicitProblem, SymDecl};
use crate::cost::Cost;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExplicitError {
    /// Malformed line. `line` is 1-based.
    #[error("line {line}: {message} (at `{token}`)")]
    Parse {
        line: usize,
        token: String,
        message: String,
    },
    /// Well-formed but inconsistent input. `line` is `None` for whole-file
    /// conditions such as a missing `init`.
    #[error("{}{message}", line_prefix(.line))]
    Semantic {
        line: Option<usize>,
        message: String,
    },
}

fn line_prefix(line: &Option<usize>) -> String {
    line.map(|l| format!("line {l}: ")).unwrap_or_default()
}

impl ExplicitError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ExplicitError::Parse { line, .. } => Some(*line),
            ExplicitError::Semantic { line, .. } => *line,
        }
    }
}

fn parse_err(line: usize, token: &str, message: impl Into<String>) -> ExplicitError {
    ExplicitError::Parse {
        line,
        token: token.to_string(),
        message: message.into(),
    }
}

fn semantic(line: impl Into<Option<usize>>, message: impl Into<String>) -> ExplicitError {
    ExplicitError::Semantic {
        line: line.into(),
        message: message.into(),
    }
}

fn name(line: usize, token: &str) -> Result<String, ExplicitError> {
    if is_name(token) {
        Ok(token.to_string())
    } else {
        Err(parse_err(line, token, "invalid name"))
    }
}

fn mapping(line: usize, token: &str) -> Result<(String, String), ExplicitError> {
    let (a, b) = token
        .split_once("->")
        .ok_or_else(|| parse_err(line, token, "expected <a>-><b>"))?;
    Ok((name(line, a)?, name(line, b)?))
}

/// Requires `pairs` to describe a bijection on `domain` once unlisted
/// elements are mapped to themselves.
fn check_bijection(
    line: usize,
    what: &str,
    pairs: &[(String, String)],
    domain: &HashSet<&str>,
) -> Result<(), ExplicitError> {
    let mut map: HashMap<&str, &str> = HashMap::new();
    for (a, b) in pairs {
        for x in [a, b] {
            if !domain.contains(x.as_str()) {
                return Err(semantic(line, format!("undeclared {what} `{x}`")));
            }
        }
        if map.insert(a, b).is_some_and(|prev| prev != b) {
            return Err(semantic(line, format!("{what} `{a}` is mapped twice")));
        }
    }
    let mut images = HashSet::new();
    for x in domain {
        let image = map.get(x).copied().unwrap_or(x);
        if !images.insert(image) {
            return Err(semantic(
                line,
                format!("map is not a bijection: `{image}` has two preimages"),
            ));
        }
    }
    Ok(())
}

/// Parses the explicit problem format; see the module docs for the grammar.
pub fn parse_problem_file(text: &[u8]) -> Result<ExplicitProblem, ExplicitError> {
    let text = std::str::from_utf8(text).map_err(|e| {
        let line = 1 + text[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count();
        parse_err(line, "", "input is not valid UTF-8")
    })?;

    let mut states: Vec<String> = Vec::new();
    let mut state_lines: HashMap<String, usize> = HashMap::new();
    let mut init: Option<(String, usize)> = None;
    let mut goals: Vec<(String, usize)> = Vec::new();
    let mut edges: Vec<(Edge, usize)> = Vec::new();
    let mut syms: Vec<(SymDecl, usize, Option<usize>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&directive, args)) = tokens.split_first() else {
            continue;
        };
        let arity = |n: usize| -> Result<(), ExplicitError> {
            match args.len().cmp(&n) {
                std::cmp::Ordering::Less => Err(parse_err(
                    line,
                    directive,
                    format!("`{directive}` takes {n} argument(s)"),
                )),
                std::cmp::Ordering::Greater => {
                    Err(parse_err(line, args[n], "unexpected extra token"))
                }
                std::cmp::Ordering::Equal => Ok(()),
            }
        };
        match directive {
            "state" => {
                arity(1)?;
                let s = name(line, args[0])?;
                if state_lines.insert(s.clone(), line).is_some() {
                    return Err(semantic(line, format!("state `{s}` declared twice")));
                }
                states.push(s);
            }
            "init" => {
                arity(1)?;
                let s = name(line, args[0])?;
                if init.is_some() {
                    return Err(semantic(line, "duplicate init"));
                }
                init = Some((s, line));
            }
            "goal" => {
                arity(1)?;
                let s = name(line, args[0])?;
                if goals.iter().any(|(g, _)| *g == s) {
                    return Err(semantic(line, format!("goal `{s}` declared twice")));
                }
                goals.push((s, line));
            }
            "edge" => {
                arity(4)?;
                let from = name(line, args[0])?;
                let label = name(line, args[1])?;
                let to = name(line, args[2])?;
                let cost: Cost = args[3]
                    .parse()
                    .map_err(|_| parse_err(line, args[3], "cost must be an integer or p/q"))?;
                if edges
                    .iter()
                    .any(|(e, _)| e.from == from && e.label == label)
                {
                    return Err(semantic(
                        line,
                        format!("second `{label}` edge out of `{from}` makes the result ambiguous"),
                    ));
                }
                edges.push((
                    Edge {
                        from,
                        label,
                        to,
                        cost,
                    },
                    line,
                ));
            }
            "sym" => {
                if args.len() < 2 {
                    return Err(parse_err(
                        line,
                        args.first().copied().unwrap_or(directive),
                        "`sym` takes a name and at least one <a>-><b> pair",
                    ));
                }
                let sym_name = name(line, args[0])?;
                let pairs = args[1..]
                    .iter()
                    .map(|t| mapping(line, t))
                    .collect::<Result<_, _>>()?;
                if syms.iter().any(|(s, _, _)| s.name == sym_name) {
                    return Err(semantic(
                        line,
                        format!("symmetry `{sym_name}` declared twice"),
                    ));
                }
                syms.push((
                    SymDecl {
                        name: sym_name,
                        states: pairs,
                        actions: Vec::new(),
                    },
                    line,
                    None,
                ));
            }
            "symact" => {
                if args.len() < 2 {
                    return Err(parse_err(
                        line,
                        args.first().copied().unwrap_or(directive),
                        "`symact` takes a name and at least one <l1>-><l2> pair",
                    ));
                }
                let sym_name = name(line, args[0])?;
                let pairs: Vec<_> = args[1..]
                    .iter()
                    .map(|t| mapping(line, t))
                    .collect::<Result<_, _>>()?;
                let Some((sym, _, act_line)) = syms.iter_mut().find(|(s, _, _)| s.name == sym_name)
                else {
                    return Err(semantic(line, format!("unknown symmetry `{sym_name}`")));
                };
                if act_line.is_some() {
                    return Err(semantic(line, format!("duplicate symact for `{sym_name}`")));
                }
                sym.actions = pairs;
                *act_line = Some(line);
            }
            other => return Err(parse_err(line, other, "unknown directive")),
        }
    }

    let declared = |s: &str, line: usize| {
        if state_lines.contains_key(s) {
            Ok(())
        } else {
            Err(semantic(line, format!("undeclared state `{s}`")))
        }
    };
    let (init, init_line) = init.ok_or_else(|| semantic(None, "missing init"))?;
    declared(&init, init_line)?;
    if goals.is_empty() {
        return Err(semantic(None, "at least one goal is required"));
    }
    for (g, line) in &goals {
        declared(g, *line)?;
    }
    for (e, line) in &edges {
        declared(&e.from, *line)?;
        declared(&e.to, *line)?;
    }

    let state_set: HashSet<&str> = states.iter().map(String::as_str).collect();
    let mut label_set: HashSet<&str> = edges.iter().map(|(e, _)| e.label.as_str()).collect();
    for (sym, _, _) in &syms {
        for (a, b) in &sym.actions {
            label_set.insert(a);
            label_set.insert(b);
        }
    }
    for (sym, line, act_line) in &syms {
        check_bijection(*line, "state", &sym.states, &state_set)?;
        if let Some(act_line) = act_line {
            check_bijection(*act_line, "label", &sym.actions, &label_set)?;
        }
    }

    Ok(ExplicitProblem {
        states,
        init,
        goals: goals.into_iter().map(|(g, _)| g).collect(),
        edges: edges.into_iter().map(|(e, _)| e).collect(),
        syms: syms.into_iter().map(|(s, _, _)| s).collect(),
    })
}

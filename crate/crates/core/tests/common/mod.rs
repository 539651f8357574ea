//! Brute-force oracles written against their own minimal models of each
//! domain, so they share no code with the library's searches or domains.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

/// Vacuum state as (position, dirt bits).
pub type Vac = (usize, Vec<bool>);

pub const VAC_ACTIONS: [&str; 3] = ["Left", "Right", "Suck"];

/// One vacuum step. With `stay`, moving into a wall is a no-op; otherwise it
/// is illegal.
pub fn vac_step(n: usize, s: &Vac, action: &str, stay: bool) -> Option<Vac> {
    let (pos, dirt) = s;
    match action {
        "Left" if *pos > 0 => Some((pos - 1, dirt.clone())),
        "Right" if pos + 1 < n => Some((pos + 1, dirt.clone())),
        "Left" | "Right" if stay => Some(s.clone()),
        "Suck" => {
            let mut d = dirt.clone();
            d[*pos] = false;
            Some((*pos, d))
        }
        _ => None,
    }
}

pub fn all_sequences(len: usize) -> Vec<Vec<&'static str>> {
    let mut seqs = vec![Vec::new()];
    for _ in 0..len {
        seqs = seqs
            .into_iter()
            .flat_map(|s| {
                VAC_ACTIONS.iter().map(move |a| {
                    let mut t = s.clone();
                    t.push(*a);
                    t
                })
            })
            .collect();
    }
    seqs
}

/// Every legal plan of exactly `len` actions that cleans the world.
pub fn vacuum_plans(n: usize, start: &Vac, len: usize) -> Vec<Vec<&'static str>> {
    all_sequences(len)
        .into_iter()
        .filter(|plan| {
            let mut s = start.clone();
            for a in plan {
                match vac_step(n, &s, a, false) {
                    Some(t) => s = t,
                    None => return false,
                }
            }
            s.1.iter().all(|d| !d)
        })
        .collect()
}

pub fn shortest_vacuum_plan(n: usize, start: &Vac, max_len: usize) -> Option<usize> {
    (0..=max_len).find(|&len| !vacuum_plans(n, start, len).is_empty())
}

pub fn every_vacuum_state(n: usize) -> Vec<Vac> {
    let mut out = Vec::new();
    for pos in 0..n {
        for bits in 0..1u32 << n {
            out.push((pos, (0..n).map(|i| bits >> i & 1 == 1).collect()));
        }
    }
    out
}

/// Plans of exactly `len` actions that clean every state in `belief` when
/// walls are no-ops.
pub fn conformant_plans(n: usize, belief: &[Vac], len: usize) -> Vec<Vec<&'static str>> {
    all_sequences(len)
        .into_iter()
        .filter(|plan| {
            belief.iter().all(|start| {
                let end = plan
                    .iter()
                    .fold(start.clone(), |s, a| vac_step(n, &s, a, true).unwrap());
                end.1.iter().all(|d| !d)
            })
        })
        .collect()
}

/// Vacuum reachable count by naive fixpoint over every state pair.
pub fn vacuum_reachable(n: usize, start: &Vac) -> usize {
    let mut reached: BTreeSet<Vac> = BTreeSet::from([start.clone()]);
    loop {
        let before = reached.len();
        let snapshot: Vec<_> = reached.iter().cloned().collect();
        for s in &snapshot {
            for a in VAC_ACTIONS {
                if let Some(t) = vac_step(n, s, a, false) {
                    reached.insert(t);
                }
            }
        }
        if reached.len() == before {
            return reached.len();
        }
    }
}

/// Missionaries and cannibals, brute force over every (m, c, b) triple.
pub struct McOracle {
    pub valid: BTreeSet<(u8, u8, u8)>,
    /// Distance from (3,3,1) for every reachable state.
    pub distance: BTreeMap<(u8, u8, u8), usize>,
}

pub fn mc_safe(m: i32, c: i32) -> bool {
    (0..=3).contains(&m)
        && (0..=3).contains(&c)
        && (m == 0 || m >= c)
        && (3 - m == 0 || 3 - m >= 3 - c)
}

pub fn mc_oracle() -> McOracle {
    let loads = [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1)];
    let mut valid = BTreeSet::new();
    for m in 0..=3u8 {
        for c in 0..=3u8 {
            for b in 0..=1u8 {
                if mc_safe(m as i32, c as i32) {
                    valid.insert((m, c, b));
                }
            }
        }
    }
    // Edge (x, y) if some load moves x to y with the boat switching sides.
    let edge = |x: &(u8, u8, u8), y: &(u8, u8, u8)| {
        let sign = if x.2 == 1 { -1 } else { 1 };
        y.2 == 1 - x.2
            && loads.iter().any(|(dm, dc)| {
                y.0 as i32 == x.0 as i32 + sign * dm && y.1 as i32 == x.1 as i32 + sign * dc
            })
    };
    let mut distance = BTreeMap::from([((3, 3, 1), 0usize)]);
    loop {
        let mut changed = false;
        for x in &valid {
            for y in &valid {
                if let Some(&dx) = distance.get(x) {
                    if edge(x, y) && distance.get(y).is_none_or(|&dy| dx + 1 < dy) {
                        distance.insert(*y, dx + 1);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return McOracle { valid, distance };
        }
    }
}

/// Minimum moves for `d` disks, by the closed form.
pub fn hanoi_optimal(d: u32) -> usize {
    (1usize << d) - 1
}

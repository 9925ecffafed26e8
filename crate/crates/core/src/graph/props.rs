use std::collections::VecDeque;

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Largest graph accepted by the exponential searches in this module.
pub const EXACT_VERTEX_LIMIT: usize = 64;
/// Largest graph accepted by [`theta_free`] (cycle enumeration).
pub const THETA_VERTEX_LIMIT: usize = 16;

/// Length of a shortest odd cycle, `None` when `g` is bipartite.
pub fn odd_girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                } else if dist[w] == dist[u] {
                    // odd closed walk through s of length 2d+1
                    let len = 2 * dist[u] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Exact chromatic number by DSATUR-ordered branch and bound.
pub fn chromatic_number(g: &SimpleGraph) -> Result<usize> {
    let n = g.n();
    if n > EXACT_VERTEX_LIMIT {
        return Err(Error::limit(format!(
            "chromatic number on {n} vertices exceeds the limit of {EXACT_VERTEX_LIMIT}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if odd_girth(g).is_none() {
        return Ok(2);
    }
    let mut k = 3;
    loop {
        let mut colors = vec![usize::MAX; n];
        if colorable(g, k, &mut colors, 0) {
            return Ok(k);
        }
        k += 1;
    }
}

fn colorable(g: &SimpleGraph, k: usize, colors: &mut [usize], colored: usize) -> bool {
    let n = g.n();
    if colored == n {
        return true;
    }
    // most saturated uncolored vertex
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0usize);
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut used = 0u64;
        for &w in g.neighbors(v) {
            if colors[w] != usize::MAX {
                used |= 1 << colors[w];
            }
        }
        let key = (used.count_ones() as usize, g.degree(v));
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }
    let max_used = colors.iter().filter(|&&c| c != usize::MAX).max().copied();
    // symmetry: never open more than one fresh color
    let limit = max_used.map_or(1, |m| (m + 2).min(k));
    for c in 0..limit {
        if g.neighbors(pick).iter().all(|&w| colors[w] != c) {
            colors[pick] = c;
            if colorable(g, k, colors, colored + 1) {
                return true;
            }
            colors[pick] = usize::MAX;
        }
    }
    false
}

/// True iff `g` has no cycle of length at least `m` together with a chord.
pub fn theta_free(g: &SimpleGraph, m: usize) -> Result<bool> {
    let n = g.n();
    if n > THETA_VERTEX_LIMIT {
        return Err(Error::limit(format!(
            "theta search on {n} vertices exceeds the limit of {THETA_VERTEX_LIMIT}"
        )));
    }
    let min_len = m.max(4);
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        on_path[s] = true;
        path.push(s);
        let found = chorded_cycle_from(g, s, min_len, &mut path, &mut on_path);
        path.pop();
        on_path[s] = false;
        if found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Extends simple paths starting at `s` through vertices larger than `s`,
/// closing them into cycles whose smallest vertex is `s`.
fn chorded_cycle_from(
    g: &SimpleGraph,
    s: usize,
    min_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let last = *path.last().expect("path holds s");
    if path.len() >= min_len && path.len() >= 3 && g.has_edge(last, s) && has_chord(g, path) {
        return true;
    }
    for &w in g.neighbors(last) {
        if w > s && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            let found = chorded_cycle_from(g, s, min_len, path, on_path);
            path.pop();
            on_path[w] = false;
            if found {
                return true;
            }
        }
    }
    false
}

fn has_chord(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    (0..k).any(|i| {
        (i + 2..k).any(|j| !(i == 0 && j == k - 1) && g.has_edge(cycle[i], cycle[j]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::blowup;

    #[test]
    fn odd_girth_examples() {
        assert_eq!(odd_girth(&SimpleGraph::cycle(5)), Some(5));
        assert_eq!(odd_girth(&SimpleGraph::cycle(4)), None);
        assert_eq!(odd_girth(&SimpleGraph::complete(4)), Some(3));
        assert_eq!(odd_girth(&blowup(&SimpleGraph::cycle(7), 2).unwrap()), Some(7));
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&SimpleGraph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&SimpleGraph::cycle(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&SimpleGraph::complete(5)).unwrap(), 5);
        assert_eq!(chromatic_number(&SimpleGraph::empty(3)).unwrap(), 1);
        // Petersen graph
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let petersen = SimpleGraph::from_edges(10, edges).unwrap();
        assert_eq!(chromatic_number(&petersen).unwrap(), 3);
    }

    #[test]
    fn theta_examples() {
        let mut c6 = SimpleGraph::cycle(6);
        assert!(theta_free(&c6, 6).unwrap());
        c6.add_edge(0, 3).unwrap();
        assert!(!theta_free(&c6, 6).unwrap());
        // the chord splits it into two 4-cycles, neither has a chord
        assert!(!theta_free(&c6, 4).unwrap());
        assert!(theta_free(&c6, 7).unwrap());
        // K4: 4-cycle with chord
        assert!(!theta_free(&SimpleGraph::complete(4), 4).unwrap());
        assert!(theta_free(&SimpleGraph::complete(4), 5).unwrap());
        assert!(theta_free(&SimpleGraph::complete(20), 4).is_err());
    }
}

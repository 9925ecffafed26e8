use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeColoredGraph, Embedding, SimpleGraph};

/// Default cap on search nodes for a single rainbow query.
pub const RAINBOW_NODE_LIMIT: u64 = 1 << 32;

const NONE: u32 = u32::MAX;

/// Backtracking search for embeddings whose edges carry pairwise distinct
/// colors.
struct Search<'a> {
    n: usize,
    /// Dense color index per host vertex pair, `NONE` for non-edges.
    cells: Vec<u32>,
    palette: usize,
    host: &'a SimpleGraph,
    pattern: &'a SimpleGraph,
    order: Vec<usize>,
    /// Pattern neighbors placed earlier in `order`.
    back: Vec<Vec<usize>>,
    /// Pattern edges still unplaced after position `i` has been placed.
    edges_left: Vec<usize>,
    images: Vec<usize>,
    used_vertex: Vec<bool>,
    used_color: Vec<bool>,
    colors_used: usize,
    nodes: u64,
    node_limit: u64,
}

impl<'a> Search<'a> {
    fn new(h: &'a EdgeColoredGraph, pattern: &'a SimpleGraph, node_limit: u64) -> Self {
        let n = h.n();
        let dense: BTreeMap<usize, u32> = h
            .palette()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, i as u32))
            .collect();
        let mut cells = vec![NONE; n * n];
        for (Edge(u, v), c) in h.colored_edges() {
            cells[u * n + v] = dense[&c];
            cells[v * n + u] = dense[&c];
        }
        Search {
            n,
            cells,
            palette: dense.len(),
            host: h.graph(),
            pattern,
            order: Vec::new(),
            back: Vec::new(),
            edges_left: Vec::new(),
            images: vec![usize::MAX; pattern.n()],
            used_vertex: vec![false; n],
            used_color: vec![false; dense.len()],
            colors_used: 0,
            nodes: 0,
            node_limit,
        }
    }

    fn set_order(&mut self, order: Vec<usize>) {
        let k = self.pattern.n();
        let mut pos = vec![0; k];
        for (i, &p) in order.iter().enumerate() {
            pos[p] = i;
        }
        self.back = order
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let mut b: Vec<usize> = self
                    .pattern
                    .neighbors(p)
                    .iter()
                    .copied()
                    .filter(|&q| pos[q] < i)
                    .collect();
                b.sort_by_key(|&q| pos[q]);
                b
            })
            .collect();
        let mut left = self.pattern.edge_count();
        self.edges_left = self
            .back
            .iter()
            .map(|b| {
                left -= b.len();
                left
            })
            .collect();
        self.order = order;
    }

    /// Tries to place pattern vertex `p` on host vertex `x`, returning the
    /// colors consumed or `None` if the placement is not rainbow.
    fn place(&mut self, i: usize, x: usize) -> Option<Vec<u32>> {
        let p = self.order[i];
        if self.used_vertex[x] || self.host.degree(x) < self.pattern.degree(p) {
            return None;
        }
        let mut taken = Vec::with_capacity(self.back[i].len());
        for &q in &self.back[i] {
            let c = self.cells[self.images[q] * self.n + x];
            if c == NONE || self.used_color[c as usize] || taken.contains(&c) {
                for &t in &taken {
                    self.used_color[t as usize] = false;
                }
                self.colors_used -= taken.len();
                return None;
            }
            self.used_color[c as usize] = true;
            self.colors_used += 1;
            taken.push(c);
        }
        if self.palette - self.colors_used < self.edges_left[i] {
            for &t in &taken {
                self.used_color[t as usize] = false;
            }
            self.colors_used -= taken.len();
            return None;
        }
        self.images[p] = x;
        self.used_vertex[x] = true;
        Some(taken)
    }

    fn unplace(&mut self, i: usize, taken: Vec<u32>) {
        let p = self.order[i];
        self.used_vertex[self.images[p]] = false;
        self.images[p] = usize::MAX;
        for t in taken {
            self.used_color[t as usize] = false;
        }
        self.colors_used -= self.back[i].len();
    }

    /// Depth-first search from position `i`; candidates are visited in
    /// increasing order so the first hit is the least image tuple along
    /// `order`.
    fn run(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::limit("rainbow search nodes"));
        }
        let candidates: Vec<usize> = match self.back[i].first() {
            Some(&q) => self.host.neighbors(self.images[q]).to_vec(),
            None => (0..self.n).collect(),
        };
        for x in candidates {
            if let Some(taken) = self.place(i, x) {
                if self.run(i + 1)? {
                    return Ok(true);
                }
                self.unplace(i, taken);
            }
        }
        Ok(false)
    }
}

/// Exhaustive search for a rainbow copy of `g` in `h`. The witness is the
/// lexicographically least image tuple `(images[0], images[1], …)`.
pub fn contains_rainbow_copy(h: &EdgeColoredGraph, g: &SimpleGraph) -> Result<Option<Embedding>> {
    contains_rainbow_copy_limited(h, g, RAINBOW_NODE_LIMIT)
}

pub fn contains_rainbow_copy_limited(
    h: &EdgeColoredGraph,
    g: &SimpleGraph,
    node_limit: u64,
) -> Result<Option<Embedding>> {
    if g.n() > h.n() || g.edge_count() > h.edge_count() {
        return Ok(None);
    }
    let mut s = Search::new(h, g, node_limit);
    s.set_order((0..g.n()).collect());
    Ok(if s.run(0)? {
        Some(Embedding::new(s.images))
    } else {
        None
    })
}

/// Rainbow copy of `g` that uses at least one of `through` (each must be a
/// host edge). A rainbow copy meets each color class at most once, so this
/// finds every copy that a newly added color class could complete.
pub fn rainbow_copy_through(
    h: &EdgeColoredGraph,
    g: &SimpleGraph,
    through: &[Edge],
) -> Result<Option<Embedding>> {
    if g.n() > h.n() || g.edge_count() > h.edge_count() {
        return Ok(None);
    }
    let mut s = Search::new(h, g, RAINBOW_NODE_LIMIT);
    for Edge(p, q) in g.edges() {
        let mut order = vec![p, q];
        while order.len() < g.n() {
            let next = (0..g.n())
                .filter(|w| !order.contains(w))
                .max_by_key(|&w| {
                    let links = g.neighbors(w).iter().filter(|x| order.contains(x)).count();
                    (links, std::cmp::Reverse(w))
                })
                .expect("unplaced vertex");
            order.push(next);
        }
        s.set_order(order);
        for e in through {
            for (a, b) in [(e.0, e.1), (e.1, e.0)] {
                if let Some(t0) = s.place(0, a) {
                    if let Some(t1) = s.place(1, b) {
                        if s.run(2)? {
                            return Ok(Some(Embedding::new(s.images)));
                        }
                        s.unplace(1, t1);
                    }
                    s.unplace(0, t0);
                }
            }
        }
    }
    Ok(None)
}

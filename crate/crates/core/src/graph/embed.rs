//! Backtracking subgraph embedding with degree pruning.

use std::ops::ControlFlow;

use super::{Embedding, SimpleGraph};
use crate::error::{Error, Result};

/// Order in which pattern vertices are assigned: each next vertex has as
/// many already-placed neighbors as possible (ties: higher degree, then
/// lower index).
pub fn search_order(pattern: &SimpleGraph) -> Vec<usize> {
    let n = pattern.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = pattern.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (back, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Backtrack<'a, A, V> {
    host: &'a SimpleGraph,
    pattern: &'a SimpleGraph,
    order: Vec<usize>,
    /// For each position, the pattern neighbors placed earlier.
    back: Vec<Vec<usize>>,
    images: Vec<usize>,
    used: Vec<bool>,
    admit: A,
    visit: V,
}

const UNSET: usize = usize::MAX;

impl<A, V> Backtrack<'_, A, V>
where
    A: FnMut(usize, usize, &[usize]) -> bool,
    V: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn run(&mut self, pos: usize) -> ControlFlow<()> {
        if pos == self.order.len() {
            return (self.visit)(&self.images);
        }
        let p = self.order[pos];
        let candidates: Vec<usize> = match self.back[pos].first() {
            Some(&q) => self.host.neighbors(self.images[q]).to_vec(),
            None => (0..self.host.n()).collect(),
        };
        for c in candidates {
            if self.used[c] || self.host.degree(c) < self.pattern.degree(p) {
                continue;
            }
            if !self.back[pos]
                .iter()
                .all(|&q| self.host.has_edge(self.images[q], c))
            {
                continue;
            }
            if !(self.admit)(p, c, &self.images) {
                continue;
            }
            self.images[p] = c;
            self.used[c] = true;
            let flow = self.run(pos + 1);
            self.used[c] = false;
            self.images[p] = UNSET;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit` with every injective edge-preserving map `pattern → host`.
///
/// `admit(p, c, partial)` may veto placing pattern vertex `p` on host vertex
/// `c`; `partial` holds `usize::MAX` for unplaced pattern vertices.
pub fn enumerate_embeddings<A, V>(host: &SimpleGraph, pattern: &SimpleGraph, admit: A, visit: V)
where
    A: FnMut(usize, usize, &[usize]) -> bool,
    V: FnMut(&[usize]) -> ControlFlow<()>,
{
    if pattern.n() > host.n() {
        return;
    }
    let order = search_order(pattern);
    let mut pos_of = vec![0; pattern.n()];
    for (i, &p) in order.iter().enumerate() {
        pos_of[p] = i;
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            pattern
                .neighbors(p)
                .iter()
                .copied()
                .filter(|&q| pos_of[q] < i)
                .collect()
        })
        .collect();
    let mut bt = Backtrack {
        host,
        pattern,
        order,
        back,
        images: vec![UNSET; pattern.n()],
        used: vec![false; host.n()],
        admit,
        visit,
    };
    let _ = bt.run(0);
}

pub fn first_embedding(host: &SimpleGraph, pattern: &SimpleGraph) -> Option<Embedding> {
    let mut found = None;
    enumerate_embeddings(
        host,
        pattern,
        |_, _, _| true,
        |images| {
            found = Some(Embedding::new(images.to_vec()));
            ControlFlow::Break(())
        },
    );
    found
}

/// Automorphism group of `g` by exhaustive self-embedding, as permutations
/// in lexicographic order (identity first).
pub fn automorphisms(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    enumerate_embeddings(
        g,
        g,
        |_, _, _| true,
        |images| {
            out.push(images.to_vec());
            ControlFlow::Continue(())
        },
    );
    out.sort();
    out
}

/// Every copy of `pattern` in `host`, one embedding per copy (the
/// lexicographically least image tuple among its automorphic images),
/// sorted lexicographically. Fails once more than `cap` copies exist.
pub fn enumerate_copies(
    host: &SimpleGraph,
    pattern: &SimpleGraph,
    cap: usize,
) -> Result<Vec<Embedding>> {
    enumerate_copies_filtered(host, pattern, cap, |_, _, _| true)
}

/// [`enumerate_copies`] with an `admit` veto as in [`enumerate_embeddings`].
/// The veto must not depend on how the pattern is labeled, otherwise some
/// copies may lose their representative.
pub fn enumerate_copies_filtered<A>(
    host: &SimpleGraph,
    pattern: &SimpleGraph,
    cap: usize,
    admit: A,
) -> Result<Vec<Embedding>>
where
    A: FnMut(usize, usize, &[usize]) -> bool,
{
    let auts = automorphisms(pattern);
    let mut copies = Vec::new();
    let mut overflow = false;
    enumerate_embeddings(host, pattern, admit, |images| {
        let canonical = auts.iter().all(|sigma| {
            // compare images∘sigma against images lexicographically
            for (i, &s) in sigma.iter().enumerate() {
                match images[s].cmp(&images[i]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => return true,
                    std::cmp::Ordering::Equal => {}
                }
            }
            true
        });
        if canonical {
            if copies.len() == cap {
                overflow = true;
                return ControlFlow::Break(());
            }
            copies.push(Embedding::new(images.to_vec()));
        }
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::limit(format!("more than {cap} copies of the pattern")));
    }
    copies.sort();
    Ok(copies)
}

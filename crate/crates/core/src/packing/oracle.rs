use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, enumerate_copies, CanonicalForm, Edge, EdgeColoredGraph, Embedding, Packing,
    SimpleGraph,
};
use crate::verify::{contains_rainbow_copy, rainbow_copy_through};

/// Caps for the exhaustive oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest `n` accepted; `None` picks the per-pattern default.
    pub max_n: Option<usize>,
    /// Largest number of non-isomorphic families kept at one level.
    pub max_families: usize,
    pub max_copies: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n: None,
            max_families: 2_000_000,
            max_copies: 1_000_000,
        }
    }
}

/// Default vertex cap: 9 for triangles, 8 otherwise.
pub fn default_max_n(pattern: &SimpleGraph) -> usize {
    if pattern.n() == 3 && pattern.edge_count() == 3 {
        9
    } else {
        8
    }
}

/// Largest rainbow-`G`-free family of edge-disjoint monochromatic copies
/// of `F` on `n` vertices, with one optimal witness.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub n: usize,
    pub pattern: SimpleGraph,
    pub forbidden: SimpleGraph,
    pub value: usize,
    pub witness: EdgeColoredGraph,
    pub packing: Packing,
    /// Number of families examined per size (size 0 first).
    pub families_per_level: Vec<usize>,
}

fn check_args(n: usize, f: &SimpleGraph, limits: &OracleLimits) -> Result<()> {
    if f.edge_count() == 0 {
        return Err(Error::InvalidPattern("pattern has no edges".into()));
    }
    let cap = limits.max_n.unwrap_or_else(|| default_max_n(f));
    if n > cap {
        let pairs = (n * n.saturating_sub(1) / 2 / f.edge_count()) as u64;
        return Err(Error::ResourceLimit {
            what: format!("n = {n} above the oracle cap {cap}"),
            lower: None,
            upper: Some(pairs),
        });
    }
    Ok(())
}

fn union(n: usize, f: &SimpleGraph, copies: &[Embedding], family: &[usize]) -> Result<Packing> {
    let p = Packing::new(f.clone(), family.iter().map(|&i| copies[i].clone()).collect());
    p.to_colored_graph(n)?;
    Ok(p)
}

/// Vertex-colored incidence graph whose isomorphism type is the family up
/// to vertex relabeling and color renaming: host vertices, one node per
/// used edge, one node per copy.
fn family_form(n: usize, edges: &[Vec<Edge>], family: &[usize]) -> CanonicalForm {
    let used: usize = family.iter().map(|&i| edges[i].len()).sum();
    let total = n + used + family.len();
    let mut g = SimpleGraph::empty(total);
    let mut colors = vec![0u32; total];
    let mut next = n;
    for (j, &i) in family.iter().enumerate() {
        let copy_node = n + used + j;
        colors[copy_node] = 2;
        for e in &edges[i] {
            colors[next] = 1;
            g.add_edge(next, e.0).expect("in range");
            g.add_edge(next, e.1).expect("in range");
            g.add_edge(next, copy_node).expect("in range");
            next += 1;
        }
    }
    canonical_form(&g, Some(&colors))
}

/// Exhaustive search by family size. Level `s + 1` extends one
/// representative of every isomorphism class at level `s` by each
/// edge-disjoint copy, keeps extensions without a rainbow `G` through the
/// new copy, and deduplicates by canonical form. Rainbow-freeness passes
/// to subfamilies, so every valid family is reached.
pub fn ex_multicolor_exact(
    n: usize,
    f: &SimpleGraph,
    g: &SimpleGraph,
    limits: OracleLimits,
) -> Result<OracleResult> {
    check_args(n, f, &limits)?;
    let host = SimpleGraph::complete(n);
    let copies = enumerate_copies(&host, f, limits.max_copies)?;
    let edges: Vec<Vec<Edge>> = copies.iter().map(|c| c.edges(f)).collect();
    let mut levels = vec![1];
    let mut best: Vec<usize> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = Vec::new();
    // the lexicographically least copy represents every single copy
    if let Some(first) = copies.first() {
        let p = Packing::new(f.clone(), vec![first.clone()]);
        if contains_rainbow_copy(&p.to_colored_graph(n)?, g)?.is_none() {
            frontier.push(vec![0]);
            best = vec![0];
        }
    }
    while !frontier.is_empty() {
        levels.push(frontier.len());
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        let mut rejected: BTreeSet<CanonicalForm> = BTreeSet::new();
        let mut next = Vec::new();
        for family in &frontier {
            let mut used = vec![false; n * n];
            for &i in family {
                for e in &edges[i] {
                    used[e.0 * n + e.1] = true;
                }
            }
            let base = union(n, f, &copies, family)?;
            for (c, ce) in edges.iter().enumerate() {
                if ce.iter().any(|e| used[e.0 * n + e.1]) {
                    continue;
                }
                let mut ext = family.clone();
                ext.push(c);
                let form = family_form(n, &edges, &ext);
                if seen.contains(&form) || rejected.contains(&form) {
                    continue;
                }
                let packing = Packing::new(
                    f.clone(),
                    base.copies().iter().cloned().chain([copies[c].clone()]).collect(),
                );
                let colored = packing.to_colored_graph(n)?;
                if rainbow_copy_through(&colored, g, ce)?.is_some() {
                    rejected.insert(form);
                    continue;
                }
                seen.insert(form);
                next.push(ext);
                if next.len() > limits.max_families {
                    return Err(Error::ResourceLimit {
                        what: format!("more than {} families of size {}", limits.max_families, family.len() + 1),
                        lower: Some(family.len() as u64 + 1),
                        upper: Some((n * n.saturating_sub(1) / 2 / f.edge_count()) as u64),
                    });
                }
            }
        }
        if let Some(first) = next.first() {
            best = first.clone();
        }
        frontier = next;
    }
    let packing = union(n, f, &copies, &best)?;
    Ok(OracleResult {
        n,
        pattern: f.clone(),
        forbidden: g.clone(),
        value: best.len(),
        witness: packing.to_colored_graph(n)?,
        packing,
        families_per_level: levels,
    })
}

/// Independent encoding for cross-checking: every set of pairwise
/// edge-disjoint copies (increasing index order, no symmetry reduction),
/// each filtered afterwards by listing all copies of `G` in the union and
/// testing their colors.
pub fn ex_multicolor_unpruned(
    n: usize,
    f: &SimpleGraph,
    g: &SimpleGraph,
    limits: OracleLimits,
) -> Result<OracleResult> {
    check_args(n, f, &limits)?;
    let host = SimpleGraph::complete(n);
    let copies = enumerate_copies(&host, f, limits.max_copies)?;
    let edges: Vec<Vec<Edge>> = copies.iter().map(|c| c.edges(f)).collect();
    let mut state = Unpruned {
        n,
        f,
        g,
        copies: &copies,
        edges: &edges,
        used: vec![false; n * n],
        family: Vec::new(),
        best: Vec::new(),
        counts: vec![0],
        error: None,
    };
    state.counts[0] = 1;
    state.consider();
    state.extend(0);
    if let Some(err) = state.error {
        return Err(err);
    }
    let best = state.best.clone();
    let counts = state.counts.clone();
    let packing = union(n, f, &copies, &best)?;
    Ok(OracleResult {
        n,
        pattern: f.clone(),
        forbidden: g.clone(),
        value: best.len(),
        witness: packing.to_colored_graph(n)?,
        packing,
        families_per_level: counts,
    })
}

struct Unpruned<'a> {
    n: usize,
    f: &'a SimpleGraph,
    g: &'a SimpleGraph,
    copies: &'a [Embedding],
    edges: &'a [Vec<Edge>],
    used: Vec<bool>,
    family: Vec<usize>,
    best: Vec<usize>,
    counts: Vec<usize>,
    error: Option<Error>,
}

impl Unpruned<'_> {
    fn rainbow_free(&self) -> Result<bool> {
        let packing = union(self.n, self.f, self.copies, &self.family)?;
        let colored = packing.to_colored_graph(self.n)?;
        let g_copies = enumerate_copies(colored.graph(), self.g, usize::MAX)?;
        Ok(g_copies.iter().all(|emb| {
            let mut cs: Vec<_> = emb
                .edges(self.g)
                .iter()
                .map(|e| colored.color(e.0, e.1).expect("edge of the union"))
                .collect();
            cs.sort_unstable();
            cs.windows(2).any(|w| w[0] == w[1])
        }))
    }

    fn consider(&mut self) {
        if self.family.len() > self.best.len() {
            match self.rainbow_free() {
                Ok(true) => self.best = self.family.clone(),
                Ok(false) => {}
                Err(e) => self.error = Some(e),
            }
        }
    }

    /// Returns false once an error has been recorded.
    fn extend(&mut self, from: usize) -> bool {
        for c in from..self.copies.len() {
            let n = self.n;
            if self.edges[c].iter().any(|e| self.used[e.0 * n + e.1]) {
                continue;
            }
            for e in &self.edges[c] {
                self.used[e.0 * n + e.1] = true;
            }
            self.family.push(c);
            if self.counts.len() <= self.family.len() {
                self.counts.push(0);
            }
            self.counts[self.family.len()] += 1;
            self.consider();
            let ok = self.error.is_none() && self.extend(c + 1);
            self.family.pop();
            for e in &self.edges[c] {
                self.used[e.0 * n + e.1] = false;
            }
            if !ok {
                return false;
            }
        }
        true
    }
}

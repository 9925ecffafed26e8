use std::collections::BTreeMap;

use serde::Serialize;

use super::fractional_packing_lp;
use crate::error::{Error, Result};
use crate::graph::{enumerate_copies, Edge, Embedding, Packing, SimpleGraph};

/// Configurable caps for the packing solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PackingLimits {
    pub max_copies: usize,
    pub max_nodes: u64,
}

impl Default for PackingLimits {
    fn default() -> Self {
        PackingLimits {
            max_copies: 100_000,
            max_nodes: 50_000_000,
        }
    }
}

/// Host, pattern and the enumerated copies with their edge incidences.
#[derive(Debug, Clone)]
pub struct PackingProblem {
    host: SimpleGraph,
    pattern: SimpleGraph,
    copies: Vec<Embedding>,
    edges: Vec<Edge>,
    /// Host edge indices of each copy.
    copy_edges: Vec<Vec<usize>>,
    /// Copies containing each host edge, increasing.
    incidence: Vec<Vec<usize>>,
}

impl PackingProblem {
    /// Enumerates the copies of `pattern`, ordered by (largest image,
    /// image tuple).
    pub fn new(host: &SimpleGraph, pattern: &SimpleGraph, limits: PackingLimits) -> Result<Self> {
        if pattern.edge_count() == 0 {
            return Err(Error::InvalidPattern("pattern has no edges".into()));
        }
        let mut copies = enumerate_copies(host, pattern, limits.max_copies)?;
        copies.sort_by_cached_key(|c| (c.images.iter().copied().max(), c.images.clone()));
        let edges = host.edges();
        let index: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let copy_edges: Vec<Vec<usize>> = copies
            .iter()
            .map(|c| c.edges(pattern).iter().map(|e| index[e]).collect())
            .collect();
        let mut incidence = vec![Vec::new(); edges.len()];
        for (i, ce) in copy_edges.iter().enumerate() {
            for &e in ce {
                incidence[e].push(i);
            }
        }
        Ok(PackingProblem {
            host: host.clone(),
            pattern: pattern.clone(),
            copies,
            edges,
            copy_edges,
            incidence,
        })
    }

    pub fn host(&self) -> &SimpleGraph {
        &self.host
    }

    pub fn pattern(&self) -> &SimpleGraph {
        &self.pattern
    }

    pub fn copies(&self) -> &[Embedding] {
        &self.copies
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn copy_edges(&self) -> &[Vec<usize>] {
        &self.copy_edges
    }

    pub fn incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    /// `⌊e(host) / e(pattern)⌋`.
    pub fn edge_bound(&self) -> usize {
        self.edges.len() / self.pattern.edge_count()
    }
}

/// Optimal integral packing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralSolution {
    pub value: usize,
    /// Indices into [`PackingProblem::copies`].
    pub chosen: Vec<usize>,
    pub nodes: u64,
}

impl IntegralSolution {
    pub fn to_packing(&self, p: &PackingProblem) -> Packing {
        Packing::new(
            p.pattern().clone(),
            self.chosen.iter().map(|&i| p.copies()[i].clone()).collect(),
        )
    }
}

struct BranchAndBound<'a> {
    p: &'a PackingProblem,
    alive: Vec<bool>,
    /// Alive copies through each edge.
    live: Vec<usize>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    min_degree: usize,
}

impl BranchAndBound<'_> {
    fn kill(&mut self, c: usize, log: &mut Vec<usize>) {
        if self.alive[c] {
            self.alive[c] = false;
            for &e in &self.p.copy_edges[c] {
                self.live[e] -= 1;
            }
            log.push(c);
        }
    }

    fn revive(&mut self, log: Vec<usize>) {
        for c in log {
            self.alive[c] = true;
            for &e in &self.p.copy_edges[c] {
                self.live[e] += 1;
            }
        }
    }

    /// Upper bound on copies still addable: coverable edges over `e(F)`,
    /// and the per-vertex degree bound.
    fn bound(&self) -> usize {
        let k = self.p.pattern.n();
        let mut coverable = 0;
        let mut deg = vec![0usize; self.p.host.n()];
        for (i, e) in self.p.edges.iter().enumerate() {
            if self.live[i] > 0 {
                coverable += 1;
                deg[e.0] += 1;
                deg[e.1] += 1;
            }
        }
        let by_edges = coverable / self.p.pattern.edge_count();
        let by_vertices = deg.iter().map(|d| d / self.min_degree).sum::<usize>() / k;
        by_edges.min(by_vertices)
    }

    fn run(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::limit("branch-and-bound nodes"));
        }
        if self.chosen.len() + self.bound() <= self.best.len() {
            return Ok(());
        }
        let branch = (0..self.live.len())
            .filter(|&e| self.live[e] > 0)
            .min_by_key(|&e| self.live[e]);
        let Some(e) = branch else {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        };
        let through: Vec<usize> =
            self.p.incidence[e].iter().copied().filter(|&c| self.alive[c]).collect();
        for &c in &through {
            let mut log = Vec::new();
            for &f in &self.p.copy_edges[c] {
                for &d in &self.p.incidence[f] {
                    self.kill(d, &mut log);
                }
            }
            self.chosen.push(c);
            let r = self.run();
            self.chosen.pop();
            self.revive(log);
            r?;
        }
        // no chosen copy uses e
        let mut log = Vec::new();
        for &c in &through {
            self.kill(c, &mut log);
        }
        let r = self.run();
        self.revive(log);
        r
    }
}

/// Maximum number of edge-disjoint copies by branching on the edge with
/// the fewest live copies (use it in one of them, or in none). On
/// overflow the error brackets the optimum between the incumbent and the
/// root bound.
pub fn max_packing_exact(p: &PackingProblem, limits: PackingLimits) -> Result<IntegralSolution> {
    let mut bb = BranchAndBound {
        p,
        alive: vec![true; p.copies.len()],
        live: p.incidence.iter().map(Vec::len).collect(),
        chosen: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        max_nodes: limits.max_nodes,
        min_degree: p.pattern.min_degree().max(1),
    };
    let mut root = bb.bound();
    if !p.copies.is_empty() {
        let lp = fractional_packing_lp(p)?;
        root = root.min(lp.floor_value());
    }
    // seed with the greedy packing in branch order
    let mut used = vec![false; p.edges.len()];
    for (c, ce) in p.copy_edges.iter().enumerate() {
        if ce.iter().all(|&e| !used[e]) {
            ce.iter().for_each(|&e| used[e] = true);
            bb.best.push(c);
        }
    }
    if bb.best.len() < root {
        if let Err(err) = bb.run() {
            return Err(match err {
                Error::ResourceLimit { what, .. } => Error::ResourceLimit {
                    what,
                    lower: Some(bb.best.len() as u64),
                    upper: Some(root as u64),
                },
                other => other,
            });
        }
    }
    let mut chosen = bb.best;
    chosen.sort_unstable();
    Ok(IntegralSolution {
        value: chosen.len(),
        chosen,
        nodes: bb.nodes,
    })
}

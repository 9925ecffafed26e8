use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{enumerate_copies_filtered, Edge, Embedding, Partition, SimpleGraph};

/// Upper limit on the number of transversal copies enumerated.
pub const TRANSVERSAL_COPY_CAP: usize = 2_000_000;

/// `⌊n / (2√2 + f - 3)⌋`, computed exactly: the largest `b` with
/// `(f-3)·b ≤ n` and `8b² ≤ (n - (f-3)·b)²`.
pub fn part_size(n: usize, f: usize) -> usize {
    let extra = f.saturating_sub(3);
    let fits = |b: usize| {
        extra * b <= n && {
            let rest = (n - extra * b) as u128;
            8 * (b as u128) * (b as u128) <= rest * rest
        }
    };
    let mut b = 0;
    while fits(b + 1) {
        b += 1;
    }
    b
}

/// Load statistics for the host edges between two parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairLoad {
    pub parts: (usize, usize),
    pub edges: usize,
    pub min_copies: usize,
    pub max_copies: usize,
    pub min_load: BigRational,
    pub max_load: BigRational,
}

/// The uniform weighting on the transversal copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightingSummary {
    /// Number of transversal copies (two vertices in part 0, one elsewhere).
    pub copies: usize,
    /// Weight of each transversal copy.
    pub weight: BigRational,
    pub total: BigRational,
    /// The part pair whose edges are saturated.
    pub target_pair: (usize, usize),
    pub target_edges: usize,
    pub loads: Vec<PairLoad>,
}

/// Host built from `F' = F / {u, v}` by blowing each vertex of `F'` up to a
/// part, together with the transversal copies and their weighting.
#[derive(Debug, Clone)]
pub struct Theorem1Host {
    pub pattern: SimpleGraph,
    /// `F'` with the merged vertex as 0 and the chosen second vertex as 1.
    pub contracted: SimpleGraph,
    /// `labels[w]` is the vertex of `contracted` that `w` maps to.
    pub labels: Vec<usize>,
    /// Common neighbor of `u` and `v`, if there is one.
    pub common_neighbor: Option<usize>,
    pub host: SimpleGraph,
    pub partition: Partition,
    pub copies: Vec<Embedding>,
    pub summary: WeightingSummary,
}

/// Builds the host for pattern `f` and non-adjacent `u, v` on `n` vertices.
///
/// Part 1 is the common neighbor of `u, v` if one exists, otherwise the
/// smallest vertex whose removal (with the merged vertex) leaves an edge.
pub fn theorem1_host(f: &SimpleGraph, u: usize, v: usize, n: usize) -> Result<Theorem1Host> {
    let k = f.n();
    if u >= k || v >= k || u == v {
        return Err(Error::InvalidPattern(format!("{u}, {v} are not two vertices of the pattern")));
    }
    if f.has_edge(u, v) {
        return Err(Error::InvalidPattern(format!("{u} and {v} are adjacent")));
    }
    let common: Vec<usize> = f.neighbors(u).iter().copied().filter(|&w| f.has_edge(v, w)).collect();
    if common.len() > 1 {
        return Err(Error::InvalidPattern(format!(
            "{u} and {v} have {} common neighbors",
            common.len()
        )));
    }

    let rest: Vec<usize> = (0..k).filter(|&w| w != u && w != v).collect();
    let edges_avoiding = |second: usize| {
        f.edges()
            .into_iter()
            .filter(|e| ![u, v, second].iter().any(|&x| e.contains(x)))
            .count()
    };
    let second = match common.first() {
        Some(&w) => w,
        None => *rest.iter().find(|&&w| edges_avoiding(w) > 0).ok_or_else(|| {
            Error::InvalidPattern("no edge survives removing the merged vertex".into())
        })?,
    };
    if edges_avoiding(second) == 0 {
        return Err(Error::InvalidPattern(
            "no edge survives removing the merged vertex and the common neighbor".into(),
        ));
    }

    let mut labels = vec![0; k];
    labels[second] = 1;
    for (next, &w) in (2..).zip(rest.iter().filter(|&&w| w != second)) {
        labels[w] = next;
    }
    let mut contracted = SimpleGraph::empty(k - 1);
    for Edge(a, b) in f.edges() {
        contracted.add_edge(labels[a], labels[b])?;
    }

    let b = part_size(n, k);
    let remaining = n - (k - 3) * b;
    let mut sizes = vec![remaining.div_ceil(2), remaining / 2];
    sizes.extend(std::iter::repeat_n(b, k - 3));
    if sizes[0] < 2 || sizes.contains(&0) {
        return Err(Error::NTooSmall {
            n,
            reason: format!("part sizes {sizes:?} leave a part too small"),
        });
    }
    let mut part_of = Vec::with_capacity(n);
    let mut classes = Vec::with_capacity(sizes.len());
    for (i, &s) in sizes.iter().enumerate() {
        classes.push((part_of.len()..part_of.len() + s).collect::<Vec<_>>());
        part_of.extend(std::iter::repeat_n(i, s));
    }
    let mut host = SimpleGraph::empty(n);
    for Edge(i, j) in contracted.edges() {
        for &x in &classes[i] {
            for &y in &classes[j] {
                host.add_edge(x, y)?;
            }
        }
    }
    let partition = Partition::new(n, classes)?;

    let copies = enumerate_copies_filtered(&host, f, TRANSVERSAL_COPY_CAP, |_, c, partial| {
        let part = part_of[c];
        let capacity = if part == 0 { 2 } else { 1 };
        partial.iter().filter(|&&x| x != usize::MAX && part_of[x] == part).count() < capacity
    })?;
    if copies.is_empty() {
        return Err(Error::Internal("no transversal copies".into()));
    }

    let target_pair = contracted
        .edges()
        .into_iter()
        .find(|e| e.0 >= 2)
        .map(|e| (e.0, e.1))
        .ok_or_else(|| Error::Internal("target pair vanished".into()))?;
    let target_edges = sizes[target_pair.0] * sizes[target_pair.1];
    let weight = BigRational::new(BigInt::from(target_edges), BigInt::from(copies.len()));
    let total = &weight * BigInt::from(copies.len());

    let mut count = vec![0usize; n * n];
    for emb in &copies {
        for Edge(x, y) in emb.edges(f) {
            count[x * n + y] += 1;
        }
    }
    let mut loads = Vec::new();
    for Edge(i, j) in contracted.edges() {
        let per_edge: Vec<usize> = classes_pairs(&partition, i, j)
            .map(|(x, y)| count[x.min(y) * n + x.max(y)])
            .collect();
        let min_copies = *per_edge.iter().min().unwrap_or(&0);
        let max_copies = *per_edge.iter().max().unwrap_or(&0);
        let load = |c: usize| &weight * BigInt::from(c);
        loads.push(PairLoad {
            parts: (i, j),
            edges: per_edge.len(),
            min_copies,
            max_copies,
            min_load: load(min_copies),
            max_load: load(max_copies),
        });
    }
    if let Some(bad) = loads.iter().find(|l| l.max_load > BigRational::one()) {
        return Err(Error::ConstructionBug(format!(
            "edges between parts {:?} carry load {}",
            bad.parts, bad.max_load
        )));
    }

    let summary = WeightingSummary {
        copies: copies.len(),
        weight,
        total,
        target_pair,
        target_edges,
        loads,
    };
    Ok(Theorem1Host {
        pattern: f.clone(),
        contracted,
        labels,
        common_neighbor: common.first().copied(),
        host,
        partition,
        copies,
        summary,
    })
}

fn classes_pairs(p: &Partition, i: usize, j: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    let (a, b) = (&p.classes()[i], &p.classes()[j]);
    a.iter().flat_map(move |&x| b.iter().map(move |&y| (x, y)))
}

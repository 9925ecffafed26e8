use super::{Edge, Partition, SimpleGraph};
use crate::error::{Error, Result};

/// The `t`-blow-up: vertex `v` becomes the class `v*t .. v*t + t` and every
/// edge becomes a complete bipartite graph between the two classes.
pub fn blowup(g: &SimpleGraph, t: usize) -> Result<SimpleGraph> {
    if t == 0 {
        return Err(Error::InvalidParameter("blow-up factor must be positive".into()));
    }
    let mut out = SimpleGraph::empty(g.n() * t);
    for Edge(u, v) in g.edges() {
        for i in 0..t {
            for j in 0..t {
                out.add_edge(u * t + i, v * t + j)?;
            }
        }
    }
    Ok(out)
}

/// Identifies two non-adjacent vertices. The merged vertex keeps the label
/// `min(u, v)`; labels above `max(u, v)` shift down by one.
pub fn contract_pair(g: &SimpleGraph, u: usize, v: usize) -> Result<SimpleGraph> {
    if u == v || u >= g.n() || v >= g.n() {
        return Err(Error::InvalidParameter(format!(
            "cannot contract {u} and {v} in a graph on {} vertices",
            g.n()
        )));
    }
    if g.has_edge(u, v) {
        return Err(Error::InvalidContraction { u, v });
    }
    let (keep, drop) = (u.min(v), u.max(v));
    let relabel = |w: usize| match w.cmp(&drop) {
        std::cmp::Ordering::Less => w,
        std::cmp::Ordering::Equal => keep,
        std::cmp::Ordering::Greater => w - 1,
    };
    SimpleGraph::from_edges(
        g.n() - 1,
        g.edges().into_iter().map(|Edge(a, b)| (relabel(a), relabel(b))),
    )
}

/// Collapses each class of `p` to a single vertex. Classes must be
/// independent sets, so the collapsing map is a homomorphism onto the result.
pub fn quotient_by_partition(g: &SimpleGraph, p: &Partition) -> Result<SimpleGraph> {
    if p.n() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition of {} vertices applied to a graph on {}",
            p.n(),
            g.n()
        )));
    }
    for (i, class) in p.classes().iter().enumerate() {
        if !g.is_independent(class) {
            return Err(Error::InvalidPartition(format!("class {i} contains an edge")));
        }
    }
    let labels = p.labels();
    SimpleGraph::from_edges(
        p.classes().len(),
        g.edges().into_iter().map(|Edge(a, b)| (labels[a], labels[b])),
    )
}

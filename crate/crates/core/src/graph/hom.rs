use std::collections::BTreeMap;

use super::{canonical_form, quotient_by_partition, search_order, Partition, SimpleGraph};
use crate::error::{Error, Result};

/// Whether an edge-preserving (not necessarily injective) map `g → h` exists.
pub fn hom_exists(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    if g.n() == 0 {
        return true;
    }
    if h.n() == 0 {
        return false;
    }
    if g.edge_count() > 0 && h.edge_count() == 0 {
        return false;
    }
    let order = search_order(g);
    let mut pos_of = vec![0; g.n()];
    for (i, &p) in order.iter().enumerate() {
        pos_of[p] = i;
    }
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            g.neighbors(p)
                .iter()
                .copied()
                .filter(|&q| pos_of[q] < i)
                .collect()
        })
        .collect();
    let mut image = vec![usize::MAX; g.n()];
    extend(g, h, &order, &back, &mut image, 0)
}

fn extend(
    g: &SimpleGraph,
    h: &SimpleGraph,
    order: &[usize],
    back: &[Vec<usize>],
    image: &mut [usize],
    pos: usize,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let p = order[pos];
    let candidates: Vec<usize> = match back[pos].first() {
        Some(&q) => h.neighbors(image[q]).to_vec(),
        None if g.degree(p) == 0 => vec![0],
        // first vertex of a component: only vertices with a neighbor qualify
        None => (0..h.n()).filter(|&c| h.degree(c) > 0).collect(),
    };
    for c in candidates {
        if back[pos].iter().all(|&q| h.has_edge(image[q], c)) {
            image[p] = c;
            if extend(g, h, order, back, image, pos + 1) {
                return true;
            }
        }
    }
    image[p] = usize::MAX;
    false
}

/// Default vertex cap for [`epi_images`].
pub const EPI_VERTEX_LIMIT: usize = 10;

/// All homomorphic images of `g` under vertex-surjective maps, i.e. the
/// quotients by partitions into independent sets, one per isomorphism
/// class. Includes `g` itself. Sorted by order, then canonical form.
pub fn epi_images(g: &SimpleGraph, vertex_limit: usize) -> Result<Vec<SimpleGraph>> {
    if g.n() > vertex_limit {
        return Err(Error::limit(format!(
            "epi_images on {} vertices exceeds the limit of {vertex_limit}",
            g.n()
        )));
    }
    let mut labels = vec![0usize; g.n()];
    let mut images = BTreeMap::new();
    partitions(g, 0, 0, &mut labels, &mut |labels| {
        let p = Partition::from_labels(labels);
        let q = quotient_by_partition(g, &p).expect("classes are independent by construction");
        images
            .entry((q.n(), canonical_form(&q, None)))
            .or_insert(q);
    });
    Ok(images.into_values().collect())
}

/// Restricted-growth enumeration of partitions whose blocks are independent.
fn partitions<F: FnMut(&[usize])>(
    g: &SimpleGraph,
    v: usize,
    blocks: usize,
    labels: &mut [usize],
    emit: &mut F,
) {
    if v == g.n() {
        emit(labels);
        return;
    }
    for b in 0..=blocks {
        if b < blocks && g.neighbors(v).iter().any(|&w| w < v && labels[w] == b) {
            continue;
        }
        labels[v] = b;
        partitions(g, v + 1, blocks.max(b + 1), labels, emit);
    }
}

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::packing_from_coloring;
use crate::error::{Error, Result};
use crate::graph::{EdgeColoredGraph, Partition, SimpleGraph};

/// Default number of random partitions tried before giving up.
pub const WITNESS_MAX_TRIES: usize = 100_000;

/// A partition into `k` classes and a bijection from classes to pattern
/// vertices under which `aligned` copies are transversal and agree with
/// the pattern on every class pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionWitness {
    pub partition: Partition,
    /// `bijection[j]` is the pattern vertex assigned to class `j`.
    pub bijection: Vec<usize>,
    /// Indices (in color order) of the aligned copies.
    pub aligned: Vec<usize>,
    /// `⌈t / k^k⌉`.
    pub required: usize,
    pub tries: usize,
}

/// Class-to-pattern bijection and the copies aligned with it.
type Group = (Vec<usize>, Vec<usize>);

/// Samples uniform random `k`-partitions (`k = v(pattern)`) until one
/// aligns at least `⌈t / k^k⌉` of the `t` monochromatic copies of `h`.
pub fn partition_witness(
    h: &EdgeColoredGraph,
    pattern: &SimpleGraph,
    seed: u64,
    max_tries: usize,
) -> Result<PartitionWitness> {
    let packing = packing_from_coloring(h, pattern)?;
    let k = pattern.n();
    if k == 0 {
        return Err(Error::InvalidPattern("empty pattern".into()));
    }
    let t = packing.len();
    let kk = (k as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let required = (t as u128).div_ceil(kk) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0usize;
    for tries in 1..=max_tries {
        let labels: Vec<usize> = (0..h.n()).map(|_| rng.gen_range(0..k)).collect();
        // group transversal copies by the labeled graph they induce on [k]
        let mut groups: BTreeMap<Vec<(usize, usize)>, Group> = BTreeMap::new();
        for (i, emb) in packing.copies().iter().enumerate() {
            let mut class_to_vertex = vec![usize::MAX; k];
            for (p, &x) in emb.images.iter().enumerate() {
                class_to_vertex[labels[x]] = p;
            }
            if class_to_vertex.contains(&usize::MAX) {
                continue;
            }
            let mut key: Vec<(usize, usize)> = pattern
                .edges()
                .into_iter()
                .map(|e| {
                    let (a, b) = (labels[emb.images[e.0]], labels[emb.images[e.1]]);
                    (a.min(b), a.max(b))
                })
                .collect();
            key.sort_unstable();
            groups
                .entry(key)
                .or_insert_with(|| (class_to_vertex, Vec::new()))
                .1
                .push(i);
        }
        let top = groups.into_values().max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.1.cmp(&a.1)));
        let (bijection, aligned) = top.unwrap_or_else(|| ((0..k).collect(), Vec::new()));
        best = best.max(aligned.len());
        if aligned.len() >= required {
            let mut classes = vec![Vec::new(); k];
            for (v, &l) in labels.iter().enumerate() {
                classes[l].push(v);
            }
            return Ok(PartitionWitness {
                partition: Partition::new(h.n(), classes)?,
                bijection,
                aligned,
                required,
                tries,
            });
        }
    }
    Err(Error::ResourceLimit {
        what: format!("partition witness after {max_tries} tries"),
        lower: Some(best as u64),
        upper: None,
    })
}

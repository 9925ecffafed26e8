//! Generators for the explicit extremal constructions. Each returns the
//! host together with a certificate that can be re-checked independently.

mod avoiding;
mod decomposition;
mod polarity;
mod ruzsa;
mod theorem1;

pub use avoiding::{avoiding_set, behrend_sphere_set, find_nontrivial_solution, AvoidingSet};
pub use decomposition::{
    cycle_blowup_decomposition, inherited_blowup_coloring, lift_packing,
    prime_blowup_decomposition, CycleLabeling,
};
pub use polarity::{c4_lower_bound_instance, er_polarity_graph, C4Instance};
pub use ruzsa::{ruzsa_host, RuzsaInstance};
pub use theorem1::{part_size, theorem1_host, PairLoad, Theorem1Host, WeightingSummary};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeColoredGraph, Embedding, Packing, SimpleGraph};

/// A family of pattern copies inside a host, edge-disjoint, and when
/// `complete` also covering every host edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCertificate {
    host: SimpleGraph,
    pattern: SimpleGraph,
    parts: Vec<Embedding>,
    complete: bool,
}

impl DecompositionCertificate {
    /// Checks the parts and records whether they cover the host.
    pub fn new(host: SimpleGraph, pattern: SimpleGraph, parts: Vec<Embedding>) -> Result<Self> {
        let owner = edge_owners(&host, &pattern, &parts)?;
        let complete = owner.len() == host.edge_count();
        Ok(DecompositionCertificate {
            host,
            pattern,
            parts,
            complete,
        })
    }

    pub fn host(&self) -> &SimpleGraph {
        &self.host
    }

    pub fn pattern(&self) -> &SimpleGraph {
        &self.pattern
    }

    pub fn parts(&self) -> &[Embedding] {
        &self.parts
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Re-checks every invariant from scratch.
    pub fn check(&self) -> Result<()> {
        let owner = edge_owners(&self.host, &self.pattern, &self.parts)?;
        let covered: usize = self.parts.len() * self.pattern.edge_count();
        if owner.len() != covered {
            return Err(Error::Internal("edge count mismatch".into()));
        }
        if self.complete && covered != self.host.edge_count() {
            return Err(Error::Internal(format!(
                "marked complete but covers {covered} of {} edges",
                self.host.edge_count()
            )));
        }
        Ok(())
    }

    /// Host colored by part index.
    pub fn to_colored(&self) -> Result<EdgeColoredGraph> {
        if !self.complete {
            return Err(Error::InvalidParameter(
                "only complete decompositions color the whole host".into(),
            ));
        }
        self.to_packing().to_colored_graph(self.host.n())
    }

    pub fn to_packing(&self) -> Packing {
        Packing::new(self.pattern.clone(), self.parts.clone())
    }
}

/// Maps every covered host edge to the part covering it; fails on invalid
/// embeddings or overlapping parts.
fn edge_owners(
    host: &SimpleGraph,
    pattern: &SimpleGraph,
    parts: &[Embedding],
) -> Result<BTreeMap<Edge, usize>> {
    let mut owner = BTreeMap::new();
    for (i, part) in parts.iter().enumerate() {
        if !part.is_valid_in(pattern, host) {
            return Err(Error::ConstructionBug(format!(
                "part {i} is not an embedding of the pattern"
            )));
        }
        for e in part.edges(pattern) {
            if let Some(j) = owner.insert(e, i) {
                return Err(Error::ConstructionBug(format!(
                    "parts {j} and {i} share the edge {e}"
                )));
            }
        }
    }
    Ok(owner)
}

pub(crate) fn is_prime(s: usize) -> bool {
    s >= 2 && (2..).take_while(|d| d * d <= s).all(|d| !s.is_multiple_of(d))
}

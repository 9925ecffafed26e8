use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{first_embedding, Color, EdgeColoredGraph, Embedding, Packing, SimpleGraph};

/// First color class that is not a copy of the pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassIssue {
    pub color: Color,
    pub reason: String,
}

/// Outcome of [`verify_packing`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingReport {
    pub ok: bool,
    /// Number of color classes inspected.
    pub classes: usize,
    pub offender: Option<ClassIssue>,
}

/// Checks that every color class of `h` is exactly the edge set of one copy
/// of `pattern` (a pattern without isolated vertices). Color classes are
/// edge-disjoint because the coloring is a function on edges.
pub fn verify_packing(h: &EdgeColoredGraph, pattern: &SimpleGraph) -> PackingReport {
    match class_embeddings(h, pattern) {
        Ok(copies) => PackingReport {
            ok: true,
            classes: copies.len(),
            offender: None,
        },
        Err(issue) => PackingReport {
            ok: false,
            classes: h.color_classes().len(),
            offender: Some(issue),
        },
    }
}

/// Recovers the packing whose union is `h`, one copy per color class.
pub fn packing_from_coloring(h: &EdgeColoredGraph, pattern: &SimpleGraph) -> Result<Packing> {
    let copies = class_embeddings(h, pattern).map_err(|issue| {
        Error::InvalidParameter(format!("color {}: {}", issue.color, issue.reason))
    })?;
    let (colors, copies): (Vec<_>, Vec<_>) = copies.into_iter().unzip();
    Packing::with_colors(pattern.clone(), copies, colors)
}

fn class_embeddings(
    h: &EdgeColoredGraph,
    pattern: &SimpleGraph,
) -> std::result::Result<Vec<(Color, Embedding)>, ClassIssue> {
    let mut out = Vec::new();
    for (color, edges) in h.color_classes() {
        let issue = |reason: String| ClassIssue { color, reason };
        if edges.len() != pattern.edge_count() {
            return Err(issue(format!(
                "{} edges, pattern has {}",
                edges.len(),
                pattern.edge_count()
            )));
        }
        let mut verts: Vec<usize> = edges.iter().flat_map(|e| [e.0, e.1]).collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() != pattern.n() {
            return Err(issue(format!(
                "spans {} vertices, pattern has {}",
                verts.len(),
                pattern.n()
            )));
        }
        let local = |x: usize| verts.binary_search(&x).expect("endpoint listed");
        let class = SimpleGraph::from_edges(verts.len(), edges.iter().map(|e| (local(e.0), local(e.1))))
            .map_err(|e| issue(e.to_string()))?;
        let emb = first_embedding(&class, pattern)
            .ok_or_else(|| issue(format!("edges {:?} do not form the pattern", edges)))?;
        out.push((color, Embedding::new(emb.images.iter().map(|&i| verts[i]).collect())));
    }
    Ok(out)
}

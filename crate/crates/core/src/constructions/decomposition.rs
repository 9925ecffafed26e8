use std::collections::BTreeMap;

use super::{is_prime, DecompositionCertificate};
use crate::error::{Error, Result};
use crate::graph::{blowup, Edge, EdgeColoredGraph, Embedding, Packing, SimpleGraph};

/// Decomposes `F(s)` into `s²` copies of `F` for a prime `s ≥ v(F)`.
///
/// Part `j` of the blow-up holds vertices `j*s .. j*s + s`. The copy
/// indexed by `(x, y)` uses value `x` in part 0, `y` in part 1 and
/// `x + (j-1)·y mod s` in part `j ≥ 2`; two copies sharing an edge would
/// force `(j-i)(y-y') ≡ 0 mod s` with `0 < j-i < s`.
pub fn prime_blowup_decomposition(f: &SimpleGraph, s: usize) -> Result<DecompositionCertificate> {
    if !is_prime(s) {
        return Err(Error::InvalidParameter(format!(
            "{s} is not prime; only prime blow-up factors are decomposed"
        )));
    }
    let t = f.n();
    if t > s {
        return Err(Error::InvalidParameter(format!(
            "pattern has {t} vertices, more than the factor {s}"
        )));
    }
    let host = blowup(f, s)?;
    let mut parts = Vec::with_capacity(s * s);
    for x in 0..s {
        for y in 0..s {
            let images = (0..t)
                .map(|j| {
                    let value = match j {
                        0 => x,
                        1 => y,
                        _ => (x + (j - 1) * y) % s,
                    };
                    j * s + value
                })
                .collect();
            parts.push(Embedding::new(images));
        }
    }
    let cert = DecompositionCertificate::new(host, f.clone(), parts)?;
    if !cert.is_complete() {
        return Err(Error::ConstructionBug("prime decomposition left edges uncovered".into()));
    }
    Ok(cert)
}

/// Labeling scheme used for the copies of `C_k` inside `C_k(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleLabeling {
    /// `x, y, x+y, x+2y, …, x+(k-2)y`; needs `gcd(k-2, t) = 1`.
    Progression,
    /// Coefficient vectors alternating so that every pair of consecutive
    /// parts sees an invertible 2×2 system; works for every `t`.
    Alternating,
}

impl CycleLabeling {
    pub fn for_params(k: usize, t: usize) -> Self {
        if gcd(k - 2, t) == 1 {
            CycleLabeling::Progression
        } else {
            CycleLabeling::Alternating
        }
    }

    /// Coefficients `(a_j, b_j)`: part `j` receives `a_j·x + b_j·y mod t`.
    fn coefficients(self, k: usize) -> Vec<(usize, usize)> {
        match self {
            CycleLabeling::Progression => (0..k)
                .map(|j| match j {
                    0 => (1, 0),
                    1 => (0, 1),
                    _ => (1, j - 1),
                })
                .collect(),
            CycleLabeling::Alternating if k.is_multiple_of(2) => {
                (0..k).map(|j| if j % 2 == 0 { (1, 0) } else { (0, 1) }).collect()
            }
            CycleLabeling::Alternating => {
                let mut c = vec![(1, 0), (0, 1), (1, 1)];
                while c.len() < k {
                    c.push((0, 1));
                    c.push((1, 1));
                }
                c
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Decomposes `C_k(t)` into `t²` edge-disjoint copies of `C_k`, one per
/// pair `(x, y) ∈ [t]²`. See [`CycleLabeling`] for the vertex labels.
pub fn cycle_blowup_decomposition(k: usize, t: usize) -> Result<DecompositionCertificate> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("cycle length {k} < 3")));
    }
    if t == 0 {
        return Err(Error::InvalidParameter("blow-up factor must be positive".into()));
    }
    let labeling = CycleLabeling::for_params(k, t);
    let coeffs = labeling.coefficients(k);
    for j in 0..k {
        let (a, b) = coeffs[j];
        let (c, d) = coeffs[(j + 1) % k];
        let det = ((a * d) % t + t - (b * c) % t) % t;
        debug_assert_eq!(gcd(det, t), 1, "consecutive parts {j},{} not invertible", j + 1);
    }
    let pattern = SimpleGraph::cycle(k);
    let host = blowup(&pattern, t)?;
    let mut parts = Vec::with_capacity(t * t);
    for x in 0..t {
        for y in 0..t {
            let images = coeffs
                .iter()
                .enumerate()
                .map(|(j, &(a, b))| j * t + (a * x + b * y) % t)
                .collect();
            parts.push(Embedding::new(images));
        }
    }
    let cert = DecompositionCertificate::new(host, pattern, parts)?;
    if !cert.is_complete() {
        return Err(Error::ConstructionBug("cycle decomposition left edges uncovered".into()));
    }
    Ok(cert)
}

/// `s`-blow-up of a colored graph where the edge between the clones of
/// `u` and `v` keeps the color of `uv`.
pub fn inherited_blowup_coloring(h: &EdgeColoredGraph, s: usize) -> Result<EdgeColoredGraph> {
    let graph = blowup(h.graph(), s)?;
    let mut colors = BTreeMap::new();
    for Edge(a, b) in graph.edges() {
        let c = h
            .color(a / s, b / s)
            .ok_or_else(|| Error::Internal("blow-up edge without a base edge".into()))?;
        colors.insert(Edge(a, b), c);
    }
    EdgeColoredGraph::new(graph, colors)
}

/// Lifts a packing of `F` to the packing of `F(s)` copies that
/// [`inherited_blowup_coloring`] produces class-wise.
pub fn lift_packing(p: &Packing, s: usize) -> Result<Packing> {
    let pattern = blowup(p.pattern(), s)?;
    let copies = p
        .copies()
        .iter()
        .map(|emb| {
            let mut images = vec![0; pattern.n()];
            for (v, &x) in emb.images.iter().enumerate() {
                for i in 0..s {
                    images[v * s + i] = x * s + i;
                }
            }
            Embedding::new(images)
        })
        .collect();
    Packing::with_colors(pattern, copies, p.colors().to_vec())
}

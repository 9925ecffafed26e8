use crate::error::{Error, Result};
use crate::graph::{EdgeColoredGraph, Embedding, Packing, SimpleGraph};

/// Arithmetic in GF(q) for the supported orders, via lookup tables.
struct Field {
    q: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

impl Field {
    fn new(q: usize) -> Result<Self> {
        let (add, mul) = match q {
            2 | 3 | 5 => (
                table(q, |a, b| (a + b) % q),
                table(q, |a, b| (a * b) % q),
            ),
            // GF(2)[x]/(x² + x + 1); element b1·x + b0 is stored as 2·b1 + b0
            4 => (table(4, |a, b| a ^ b), table(4, gf4_mul)),
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "field order {q} unsupported; use 2, 3, 4 or 5"
                )))
            }
        };
        Ok(Field { q, add, mul })
    }

    fn dot(&self, x: &[usize; 3], y: &[usize; 3]) -> usize {
        (0..3).fold(0, |acc, i| self.add[acc][self.mul[x[i]][y[i]]])
    }
}

fn table(q: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..q).map(|a| (0..q).map(|b| f(a, b)).collect()).collect()
}

fn gf4_mul(a: usize, b: usize) -> usize {
    let mut prod = 0;
    for i in 0..2 {
        if b >> i & 1 == 1 {
            prod ^= a << i;
        }
    }
    if prod & 0b100 != 0 {
        prod ^= 0b111;
    }
    prod
}

/// Projective points of PG(2, q) with first non-zero coordinate 1, in
/// lexicographic order.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = Vec::with_capacity(q * q + q + 1);
    pts.push([0, 0, 1]);
    for c in 0..q {
        pts.push([0, 1, c]);
    }
    for b in 0..q {
        for c in 0..q {
            pts.push([1, b, c]);
        }
    }
    pts
}

/// Polarity graph of PG(2, q): points adjacent when orthogonal, absolute
/// points losing their loop. `q(q+1)²/2` edges on `q² + q + 1` vertices.
/// The result is checked to be C_4-free (every pair has at most one common
/// neighbor) before it is returned.
pub fn er_polarity_graph(q: usize) -> Result<SimpleGraph> {
    let field = Field::new(q)?;
    let pts = projective_points(field.q);
    let mut g = SimpleGraph::empty(pts.len());
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if field.dot(&pts[i], &pts[j]) == 0 {
                g.add_edge(i, j)?;
            }
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let common = g.neighbors(u).iter().filter(|&&w| g.has_edge(v, w)).count();
            if common > 1 {
                return Err(Error::ConstructionBug(format!(
                    "polarity graph vertices {u}, {v} share {common} neighbors"
                )));
            }
        }
    }
    Ok(g)
}

/// Polarity base, its 2-blow-up colored so that each base edge becomes one
/// monochromatic 4-cycle, and the packing of those cycles.
#[derive(Debug, Clone)]
pub struct C4Instance {
    pub q: usize,
    pub base: SimpleGraph,
    pub colored: EdgeColoredGraph,
    pub packing: Packing,
}

/// Base vertex `u` becomes `2u, 2u+1`; base edge `uv` (color = its index
/// in the sorted edge list) becomes the cycle `2u, 2v, 2u+1, 2v+1`.
pub fn c4_lower_bound_instance(q: usize) -> Result<C4Instance> {
    let base = er_polarity_graph(q)?;
    let copies = base
        .edges()
        .into_iter()
        .map(|e| Embedding::new(vec![2 * e.0, 2 * e.1, 2 * e.0 + 1, 2 * e.1 + 1]))
        .collect();
    let packing = Packing::new(SimpleGraph::cycle(4), copies);
    let colored = packing.to_colored_graph(2 * base.n())?;
    Ok(C4Instance {
        q,
        base,
        colored,
        packing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{blowup, first_embedding};

    #[test]
    fn field_axioms_gf4() {
        let f = Field::new(4).unwrap();
        for a in 1..4 {
            assert_eq!((1..4).filter(|&b| f.mul[a][b] == 1).count(), 1, "inverse of {a}");
            for b in 0..4 {
                for c in 0..4 {
                    let lhs = f.mul[a][f.add[b][c]];
                    assert_eq!(lhs, f.add[f.mul[a][b]][f.mul[a][c]]);
                }
            }
        }
    }

    #[test]
    fn edge_counts_and_c4_freeness() {
        for q in 2..=5 {
            let g = er_polarity_graph(q).unwrap();
            assert_eq!(g.n(), q * q + q + 1);
            assert_eq!(g.edge_count(), q * (q + 1) * (q + 1) / 2, "q = {q}");
            assert!(first_embedding(&g, &SimpleGraph::cycle(4)).is_none());
        }
        assert!(er_polarity_graph(6).is_err());
    }

    #[test]
    fn instance_is_the_blowup() {
        let inst = c4_lower_bound_instance(2).unwrap();
        assert_eq!(inst.packing.len(), 9);
        assert_eq!(inst.colored.graph(), &blowup(&inst.base, 2).unwrap());
    }
}

use super::AvoidingSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeColoredGraph, Embedding, Packing, SimpleGraph};

/// `k`-partite host on parts `V_i = [i·N]` (`i = 1..k`) packed with the
/// `N·|A|` progressions `x, x+a, …, x+(k-1)a` for `x ∈ [N]`, `a ∈ A`.
#[derive(Debug, Clone)]
pub struct RuzsaInstance {
    k: usize,
    bound: usize,
    set: AvoidingSet,
    colored: EdgeColoredGraph,
    packing: Packing,
}

impl RuzsaInstance {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn set(&self) -> &AvoidingSet {
        &self.set
    }

    /// Union of the packing cycles, colored by packing index.
    pub fn colored(&self) -> &EdgeColoredGraph {
        &self.colored
    }

    pub fn packing(&self) -> &Packing {
        &self.packing
    }

    pub fn n(&self) -> usize {
        self.k * (self.k + 1) / 2 * self.bound
    }

    /// Vertex id of value `x ∈ [1, part·N]` in the 1-based `part`.
    pub fn vertex(&self, part: usize, x: usize) -> usize {
        debug_assert!((1..=self.k).contains(&part) && (1..=part * self.bound).contains(&x));
        vertex_id(self.bound, part, x)
    }

    /// Inverse of [`RuzsaInstance::vertex`]: `(part, value)`.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        let mut part = 1;
        while self.bound * part * (part + 1) / 2 <= v {
            part += 1;
        }
        (part, v - self.bound * part * (part - 1) / 2 + 1)
    }

    /// The host with every admissible edge: `x_i x_{i+1}` whenever the
    /// difference lies in `A`, and `x_1 x_k` whenever `(x_k - x_1)/(k-1)`
    /// does. Contains edges that lie on no packing cycle.
    pub fn full_host(&self) -> SimpleGraph {
        let (k, n_bound) = (self.k, self.bound);
        let mut g = SimpleGraph::empty(self.n());
        for &a in self.set.elements() {
            for i in 1..k {
                for x in 1..=i * n_bound {
                    if x + a <= (i + 1) * n_bound {
                        let _ = g.add_edge(self.vertex(i, x), self.vertex(i + 1, x + a));
                    }
                }
            }
            for x in 1..=n_bound {
                let y = x + (k - 1) * a;
                if y <= k * n_bound {
                    let _ = g.add_edge(self.vertex(1, x), self.vertex(k, y));
                }
            }
        }
        g
    }
}

/// Builds the progression packing for odd `k ≥ 3` and `A ⊆ [N]` valid for
/// arity `k`. Fails with a construction bug if two cycles ever share an edge.
pub fn ruzsa_host(k: usize, bound: usize, set: &AvoidingSet) -> Result<RuzsaInstance> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("k = {k} must be odd and at least 3")));
    }
    if bound == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    if set.k() != k {
        return Err(Error::InvalidParameter(format!(
            "set avoids arity {} but k = {k}",
            set.k()
        )));
    }
    if set.elements().iter().any(|&a| a > bound) || !set.is_valid() {
        return Err(Error::InvalidParameter(format!("set is not a valid subset of [1, {bound}]")));
    }
    let n = k * (k + 1) / 2 * bound;
    let mut copies = Vec::with_capacity(bound * set.len());
    for x in 1..=bound {
        for &a in set.elements() {
            let images = (1..=k).map(|i| vertex_id(bound, i, x + (i - 1) * a)).collect();
            copies.push(Embedding::new(images));
        }
    }
    let packing = Packing::new(SimpleGraph::cycle(k), copies);
    let colored = packing
        .to_colored_graph(n)
        .map_err(|e| Error::ConstructionBug(format!("progression cycles overlap: {e}")))?;
    let inst = RuzsaInstance {
        k,
        bound,
        set: set.clone(),
        colored,
        packing,
    };
    let full = inst.full_host();
    let stray = inst.colored.graph().edges().into_iter().find(|e| !full.has_edge(e.0, e.1));
    if let Some(e) = stray {
        return Err(Error::ConstructionBug(format!("cycle edge {e} is not admissible")));
    }
    Ok(inst)
}

fn vertex_id(bound: usize, part: usize, x: usize) -> usize {
    bound * part * (part - 1) / 2 + x - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::avoiding_set;

    #[test]
    fn two_triangles() {
        let a = AvoidingSet::new(2, 3, vec![1]).unwrap();
        let r = ruzsa_host(3, 2, &a).unwrap();
        assert_eq!(r.n(), 12);
        assert_eq!(r.packing().len(), 2);
        let values: Vec<Vec<usize>> = r
            .packing()
            .copies()
            .iter()
            .map(|c| c.images.iter().map(|&v| r.locate(v).1).collect())
            .collect();
        assert_eq!(values, vec![vec![1, 2, 3], vec![2, 3, 4]]);
    }

    #[test]
    fn vertex_numbering_round_trips() {
        let a = avoiding_set(3, 5).unwrap();
        let r = ruzsa_host(5, 3, &a).unwrap();
        for v in 0..r.n() {
            let (p, x) = r.locate(v);
            assert_eq!(r.vertex(p, x), v);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let a = avoiding_set(4, 3).unwrap();
        assert!(ruzsa_host(4, 4, &a).is_err());
        assert!(ruzsa_host(5, 4, &a).is_err());
        assert!(ruzsa_host(3, 2, &a).is_err());
    }
}

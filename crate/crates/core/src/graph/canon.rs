//! Canonical forms by color refinement plus an individualization search.
//!
//! Leaves of the search tree are compared by their adjacency bit string;
//! the least one is the canonical form. Automorphisms discovered at equal
//! leaves prune sibling branches in the same orbit.

use super::SimpleGraph;

/// Isomorphism-invariant certificate of a vertex-colored graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    colors: Vec<u32>,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }
}

/// Canonical form of `g` with optional vertex colors. Colors are preserved
/// exactly (not up to renaming).
pub fn canonical_form(g: &SimpleGraph, vertex_colors: Option<&[u32]>) -> CanonicalForm {
    canonical_labeling(g, vertex_colors).0
}

/// Canonical form together with the ordering that realizes it:
/// `order[i]` is the vertex placed at canonical position `i`.
pub(crate) fn canonical_labeling(
    g: &SimpleGraph,
    vertex_colors: Option<&[u32]>,
) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let colors: Vec<u32> = match vertex_colors {
        Some(c) => {
            assert_eq!(c.len(), n, "one color per vertex");
            c.to_vec()
        }
        None => vec![0; n],
    };
    let mut initial: Vec<Vec<usize>> = Vec::new();
    let mut by_color: Vec<(u32, usize)> = colors.iter().copied().zip(0..n).collect();
    by_color.sort_unstable();
    for (c, v) in by_color {
        match initial.last_mut() {
            Some(cell) if colors[cell[0]] == c => cell.push(v),
            _ => initial.push(vec![v]),
        }
    }
    let mut sorted_colors = colors.clone();
    sorted_colors.sort_unstable();

    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.descend(initial, &mut Vec::new());
    let (bits, order) = search.best.expect("search visits at least one leaf");
    (
        CanonicalForm {
            n,
            colors: sorted_colors,
            bits,
        },
        order,
    )
}

struct Search<'a> {
    g: &'a SimpleGraph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &w in &cells[target] {
            if !tried.is_empty() && self.equivalent_to_tried(prefix, &tried, w) {
                continue;
            }
            tried.push(w);
            let mut next = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    next.push(vec![w]);
                    next.push(cell.iter().copied().filter(|&x| x != w).collect());
                } else {
                    next.push(cell.clone());
                }
            }
            prefix.push(w);
            self.descend(next, prefix);
            prefix.pop();
        }
    }

    /// Whether `w` lies in the orbit of an already tried vertex under the
    /// known automorphisms that fix `prefix` pointwise.
    fn equivalent_to_tried(&self, prefix: &[usize], tried: &[usize], w: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (x, &gx) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        tried.iter().any(|&t| find(&mut parent, t) == rw)
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let bits = certificate(self.g, &order);
        match &self.best {
            None => self.best = Some((bits, order)),
            Some((best_bits, best_order)) => match bits.cmp(best_bits) {
                std::cmp::Ordering::Less => self.best = Some((bits, order)),
                std::cmp::Ordering::Equal => {
                    let n = order.len();
                    let mut gamma = vec![0; n];
                    for i in 0..n {
                        gamma[best_order[i]] = order[i];
                    }
                    if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                        self.automorphisms.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

fn certificate(g: &SimpleGraph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

/// Equitable refinement: split every cell by the vector of neighbor counts
/// into each cell until nothing changes. Sub-cells are ordered by their
/// count vector, which keeps the procedure label-independent.
fn refine(g: &SimpleGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(k);
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u32; k];
                    for &w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let start = next.len();
            for (i, (sig, v)) in keyed.iter().enumerate() {
                if i > 0 && *sig == keyed[i - 1].0 {
                    next.last_mut().expect("open cell").push(*v);
                } else {
                    next.push(vec![*v]);
                }
            }
            if next.len() - start > 1 {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::blowup;

    fn rotate(n: usize, s: usize) -> Vec<usize> {
        (0..n).map(|v| (v * s + 1) % n).collect()
    }

    #[test]
    fn relabeled_graphs_agree() {
        let c7 = SimpleGraph::cycle(7);
        let r = c7.relabel(&rotate(7, 3)).unwrap();
        assert_eq!(canonical_form(&c7, None), canonical_form(&r, None));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c6 = SimpleGraph::cycle(6);
        let two_triangles =
            SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_form(&c6, None), canonical_form(&two_triangles, None));
    }

    #[test]
    fn symmetric_graphs_finish() {
        let k8 = SimpleGraph::complete(8);
        let f = canonical_form(&k8, None);
        assert_eq!(f.n(), 8);
        let big = blowup(&SimpleGraph::cycle(5), 6).unwrap();
        let r = big.relabel(&rotate(30, 7)).unwrap();
        assert_eq!(canonical_form(&big, None), canonical_form(&r, None));
    }

    #[test]
    fn vertex_colors_matter() {
        let p3 = SimpleGraph::path(3);
        let a = canonical_form(&p3, Some(&[1, 0, 0]));
        let b = canonical_form(&p3, Some(&[0, 1, 0]));
        let c = canonical_form(&p3, Some(&[0, 0, 1]));
        assert_ne!(a, b);
        assert_eq!(a, c);
    }
}

//! Small exact graph primitives: simple graphs, edge colorings, embeddings
//! and vertex partitions.
//!
//! Vertices are always the dense range `0..n`. Every collection handed out
//! by this module is sorted, so downstream searches are deterministic.

mod canon;
mod embed;
mod hom;
pub mod io;
mod ops;
mod props;

pub use canon::{canonical_form, CanonicalForm};
pub use embed::{
    automorphisms, enumerate_copies, enumerate_copies_filtered, enumerate_embeddings,
    first_embedding, search_order,
};
pub use hom::{epi_images, hom_exists, EPI_VERTEX_LIMIT};
pub use ops::{blowup, contract_pair, quotient_by_partition};
pub use props::{chromatic_number, odd_girth, theta_free, EXACT_VERTEX_LIMIT, THETA_VERTEX_LIMIT};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Color identifier of a monochromatic copy.
pub type Color = usize;

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn contains(&self, w: usize) -> bool {
        self.0 == w || self.1 == w
    }

    /// The endpoint that is not `w`.
    pub fn other(&self, w: usize) -> usize {
        if self.0 == w {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Undirected loopless graph without multi-edges on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
    m: usize,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![false; n * n],
            nbrs: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`. Adding an existing edge is a no-op; loops and
    /// out-of-range endpoints are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge {u}-{v} out of range for n = {}",
                self.n
            )));
        }
        if self.adj[u * self.n + v] {
            return Ok(false);
        }
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        insert_sorted(&mut self.nbrs[u], v);
        insert_sorted(&mut self.nbrs[v], u);
        self.m += 1;
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.nbrs[u] {
                if u < v {
                    out.push(Edge(u, v));
                }
            }
        }
        out
    }

    pub fn cycle(k: usize) -> Self {
        let mut g = SimpleGraph::empty(k);
        if k >= 3 {
            for i in 0..k {
                g.add_edge(i, (i + 1) % k).expect("cycle edge");
            }
        }
        g
    }

    pub fn path(k: usize) -> Self {
        let mut g = SimpleGraph::empty(k);
        for i in 1..k {
            g.add_edge(i - 1, i).expect("path edge");
        }
        g
    }

    pub fn complete(k: usize) -> Self {
        let mut g = SimpleGraph::empty(k);
        for u in 0..k {
            for v in u + 1..k {
                g.add_edge(u, v).expect("complete edge");
            }
        }
        g
    }

    /// Graph obtained by renaming vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        SimpleGraph::from_edges(
            self.n,
            self.edges().into_iter().map(|Edge(u, v)| (perm[u], perm[v])),
        )
    }

    /// Subgraph on `0..n` keeping only the listed edges.
    pub fn spanning_subgraph<I: IntoIterator<Item = Edge>>(&self, edges: I) -> Result<Self> {
        let mut g = SimpleGraph::empty(self.n);
        for e in edges {
            if !self.has_edge(e.0, e.1) {
                return Err(Error::InvalidParameter(format!("{e} is not an edge")));
            }
            g.add_edge(e.0, e.1)?;
        }
        Ok(g)
    }

    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n <= other.n && self.edges().iter().all(|e| other.has_edge(e.0, e.1))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    let pos = v.partition_point(|&y| y < x);
    v.insert(pos, x);
}

/// A simple graph together with a total edge coloring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeColoredGraph {
    graph: SimpleGraph,
    colors: BTreeMap<Edge, Color>,
}

impl EdgeColoredGraph {
    pub fn new(graph: SimpleGraph, colors: BTreeMap<Edge, Color>) -> Result<Self> {
        if colors.len() != graph.edge_count() {
            return Err(Error::InvalidParameter(format!(
                "coloring covers {} entries but graph has {} edges",
                colors.len(),
                graph.edge_count()
            )));
        }
        for e in colors.keys() {
            if !graph.has_edge(e.0, e.1) {
                return Err(Error::InvalidParameter(format!("colored pair {e} is not an edge")));
            }
        }
        Ok(EdgeColoredGraph { graph, colors })
    }

    /// Builds the colored graph from `(u, v, color)` triples on `n` vertices.
    pub fn from_colored_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        let mut graph = SimpleGraph::empty(n);
        let mut colors = BTreeMap::new();
        for (u, v, c) in edges {
            if !graph.add_edge(u, v)? {
                return Err(Error::InvalidParameter(format!("duplicate edge {u}-{v}")));
            }
            colors.insert(Edge::new(u, v), c);
        }
        Ok(EdgeColoredGraph { graph, colors })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        self.colors.get(&Edge::new(u, v)).copied()
    }

    pub fn colored_edges(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.colors.iter().map(|(e, c)| (*e, *c))
    }

    /// Distinct colors in increasing order.
    pub fn palette(&self) -> Vec<Color> {
        let mut p: Vec<Color> = self.colors.values().copied().collect();
        p.sort_unstable();
        p.dedup();
        p
    }

    /// Edges of each color class, keyed by color.
    pub fn color_classes(&self) -> BTreeMap<Color, Vec<Edge>> {
        let mut classes: BTreeMap<Color, Vec<Edge>> = BTreeMap::new();
        for (e, c) in &self.colors {
            classes.entry(*c).or_default().push(*e);
        }
        classes
    }

    pub fn recolor(&mut self, e: Edge, c: Color) -> Result<()> {
        match self.colors.get_mut(&e) {
            Some(slot) => {
                *slot = c;
                Ok(())
            }
            None => Err(Error::InvalidParameter(format!("{e} is not an edge"))),
        }
    }

    /// Dense color lookup table, `None` for non-edges.
    pub fn color_matrix(&self) -> ColorMatrix {
        let n = self.n();
        let mut cells = vec![None; n * n];
        for (e, c) in &self.colors {
            cells[e.0 * n + e.1] = Some(*c);
            cells[e.1 * n + e.0] = Some(*c);
        }
        ColorMatrix { n, cells }
    }
}

/// O(1) color lookup used by the inner loops of the searches.
#[derive(Clone, Debug)]
pub struct ColorMatrix {
    n: usize,
    cells: Vec<Option<Color>>,
}

impl ColorMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<Color> {
        self.cells[u * self.n + v]
    }
}

/// Injective map from the vertices of a pattern into a host, stored as the
/// image tuple `images[p]` for pattern vertex `p`. The pattern itself is
/// kept by the owning container.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub images: Vec<usize>,
}

impl Embedding {
    pub fn new(images: Vec<usize>) -> Self {
        Embedding { images }
    }

    /// Host edges covered by this embedding, in pattern edge order.
    pub fn edges(&self, pattern: &SimpleGraph) -> Vec<Edge> {
        pattern
            .edges()
            .into_iter()
            .map(|Edge(a, b)| Edge::new(self.images[a], self.images[b]))
            .collect()
    }

    pub fn is_valid_in(&self, pattern: &SimpleGraph, host: &SimpleGraph) -> bool {
        if self.images.len() != pattern.n() || self.images.iter().any(|&x| x >= host.n()) {
            return false;
        }
        let mut sorted = self.images.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        pattern
            .edges()
            .iter()
            .all(|e| host.has_edge(self.images[e.0], self.images[e.1]))
    }
}

/// An ordered list of pairwise disjoint classes covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
    n: usize,
}

impl Partition {
    pub fn new(n: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut classes = classes;
        for class in &mut classes {
            class.sort_unstable();
            for &x in class.iter() {
                if x >= n {
                    return Err(Error::InvalidPartition(format!("vertex {x} out of range")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidPartition(format!("vertex {x} in two classes")));
                }
            }
        }
        if let Some(x) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {x} not covered")));
        }
        Ok(Partition { classes, n })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            classes: (0..n).map(|v| vec![v]).collect(),
            n,
        }
    }

    /// Builds a partition from a class label per vertex; labels need not be
    /// contiguous, classes appear in increasing label order.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut by_label: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(v);
        }
        Partition {
            classes: by_label.into_values().collect(),
            n: labels.len(),
        }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `labels[v]` is the index of the class holding `v`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                labels[v] = i;
            }
        }
        labels
    }
}

/// An ordered family of pattern embeddings with one distinct color each.
/// Edge-disjointness is checked when the family is turned into a colored
/// graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pattern: SimpleGraph,
    copies: Vec<Embedding>,
    colors: Vec<Color>,
}

impl Packing {
    /// Copy `i` gets color `i`.
    pub fn new(pattern: SimpleGraph, copies: Vec<Embedding>) -> Self {
        let colors = (0..copies.len()).collect();
        Packing {
            pattern,
            copies,
            colors,
        }
    }

    pub fn with_colors(
        pattern: SimpleGraph,
        copies: Vec<Embedding>,
        colors: Vec<Color>,
    ) -> Result<Self> {
        if colors.len() != copies.len() {
            return Err(Error::InvalidParameter("one color per copy required".into()));
        }
        let mut sorted = colors.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("copy colors must be distinct".into()));
        }
        Ok(Packing {
            pattern,
            copies,
            colors,
        })
    }

    pub fn pattern(&self) -> &SimpleGraph {
        &self.pattern
    }

    pub fn copies(&self) -> &[Embedding] {
        &self.copies
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    pub fn colored_copies(&self) -> impl Iterator<Item = (Color, &Embedding)> {
        self.colors.iter().copied().zip(self.copies.iter())
    }

    /// Union of the copies on `n` vertices, each copy in its own color.
    /// Fails if two copies share an edge or an image is out of range.
    pub fn to_colored_graph(&self, n: usize) -> Result<EdgeColoredGraph> {
        let mut graph = SimpleGraph::empty(n);
        let mut colors = BTreeMap::new();
        for (c, emb) in self.colored_copies() {
            if emb.images.len() != self.pattern.n() {
                return Err(Error::InvalidParameter(format!(
                    "copy of color {c} has {} images, pattern has {} vertices",
                    emb.images.len(),
                    self.pattern.n()
                )));
            }
            for e in emb.edges(&self.pattern) {
                if !graph.add_edge(e.0, e.1)? {
                    return Err(Error::InvalidParameter(format!(
                        "edge {e} lies in copy of color {c} and in copy of color {}",
                        colors[&e]
                    )));
                }
                colors.insert(e, c);
            }
        }
        Ok(EdgeColoredGraph { graph, colors })
    }
}

/// Parses the short pattern names used across the toolkit: `C3`..`C9`,
/// `K3`..`K5`, `P2`..`P9`.
pub fn named_pattern(name: &str) -> Result<SimpleGraph> {
    let name = name.trim();
    let (kind, rest) = name.split_at(name.chars().next().map_or(0, |c| c.len_utf8()));
    let k: usize = rest
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("unknown pattern name {name:?}")))?;
    match kind.to_ascii_uppercase().as_str() {
        "C" if (3..=9).contains(&k) => Ok(SimpleGraph::cycle(k)),
        "K" if (3..=5).contains(&k) => Ok(SimpleGraph::complete(k)),
        "P" if (2..=9).contains(&k) => Ok(SimpleGraph::path(k)),
        _ => Err(Error::InvalidParameter(format!("unknown pattern name {name:?}"))),
    }
}

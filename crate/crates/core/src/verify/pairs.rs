use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{contains_rainbow_copy, verify_packing};
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoredGraph, SimpleGraph};

/// Size class of a vertex pair by its number of rainbow common neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum PairSize {
    /// At most one.
    Small,
    /// Exactly two.
    Medium,
    /// Three or more.
    Large,
}

impl PairSize {
    pub fn of(count: usize) -> Self {
        match count {
            0 | 1 => PairSize::Small,
            2 => PairSize::Medium,
            _ => PairSize::Large,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairClass {
    pub pair: (usize, usize),
    pub rainbow_common_neighbors: Vec<usize>,
    pub size: PairSize,
}

/// Vertices `w` adjacent to both `u` and `v` with `c(wu) ≠ c(wv)`, sorted.
pub fn rainbow_common_neighbors(h: &EdgeColoredGraph, u: usize, v: usize) -> Result<Vec<usize>> {
    if u == v || u >= h.n() || v >= h.n() {
        return Err(Error::InvalidQuery(format!("{u}, {v} are not two vertices of the host")));
    }
    Ok(rcn_unchecked(h, u, v))
}

fn rcn_unchecked(h: &EdgeColoredGraph, u: usize, v: usize) -> Vec<usize> {
    h.graph()
        .neighbors(u)
        .iter()
        .copied()
        .filter(|&w| w != v && matches!((h.color(w, u), h.color(w, v)), (Some(a), Some(b)) if a != b))
        .collect()
}

pub fn classify_pair(h: &EdgeColoredGraph, u: usize, v: usize) -> Result<PairClass> {
    let rcn = rainbow_common_neighbors(h, u, v)?;
    Ok(PairClass {
        pair: (u.min(v), u.max(v)),
        size: PairSize::of(rcn.len()),
        rainbow_common_neighbors: rcn,
    })
}

/// Coloring pattern of the 2-by-3 bipartite graph joining a Large pair to
/// its rainbow common neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PatternKind {
    /// Each of the pair has two edges of one private color (the two color
    /// classes meet in one neighbor); the remaining two edges share a third
    /// color.
    Type1,
    /// Three colors, each on one edge from either member of the pair.
    Type2,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternType {
    pub kind: PatternKind,
    /// The edges `(pair member, neighbor, color)` the pattern was read from.
    pub witness: Vec<(usize, usize, Color)>,
}

/// Template on vertices `u = 0, v = 1, x_i = i + 1`.
fn template(kind: PatternKind) -> [(usize, usize, Color); 6] {
    match kind {
        PatternKind::Type1 => [(0, 2, 0), (0, 3, 0), (0, 4, 2), (1, 2, 2), (1, 3, 1), (1, 4, 1)],
        PatternKind::Type2 => [(0, 2, 0), (0, 3, 1), (0, 4, 2), (1, 2, 1), (1, 3, 2), (1, 4, 0)],
        PatternKind::Other => unreachable!("no template for Other"),
    }
}

/// Whether two colored graphs on `n` vertices have the same coloring
/// pattern: some vertex bijection is an isomorphism and induces a
/// bijection between the color sets. Brute force over all bijections.
pub fn same_coloring_pattern(
    n: usize,
    a: &[(usize, usize, Color)],
    b: &[(usize, usize, Color)],
) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let color_b: BTreeMap<(usize, usize), Color> =
        b.iter().map(|&(x, y, c)| ((x.min(y), x.max(y)), c)).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut fwd = BTreeMap::new();
        let mut bwd = BTreeMap::new();
        let ok = a.iter().all(|&(x, y, c)| {
            let (px, py) = (perm[x], perm[y]);
            match color_b.get(&(px.min(py), px.max(py))) {
                Some(&d) => *fwd.entry(c).or_insert(d) == d && *bwd.entry(d).or_insert(c) == c,
                None => false,
            }
        });
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Matches the pair's bipartite graph against the two templates.
pub fn pattern_type(h: &EdgeColoredGraph, u: usize, v: usize) -> Result<PatternType> {
    let class = classify_pair(h, u, v)?;
    if class.size != PairSize::Large {
        return Err(Error::InvalidQuery(format!(
            "pair {u}, {v} has {} rainbow common neighbors, not a Large pair",
            class.rainbow_common_neighbors.len()
        )));
    }
    let rcn = &class.rainbow_common_neighbors;
    let mut witness = Vec::with_capacity(2 * rcn.len());
    let mut local = Vec::with_capacity(2 * rcn.len());
    for (side, &s) in [u, v].iter().enumerate() {
        for (i, &x) in rcn.iter().enumerate() {
            let c = h.color(s, x).expect("rainbow common neighbor is adjacent");
            witness.push((s, x, c));
            local.push((side, i + 2, c));
        }
    }
    let kind = if rcn.len() != 3 {
        PatternKind::Other
    } else if same_coloring_pattern(5, &local, &template(PatternKind::Type1)) {
        PatternKind::Type1
    } else if same_coloring_pattern(5, &local, &template(PatternKind::Type2)) {
        PatternKind::Type2
    } else {
        PatternKind::Other
    };
    Ok(PatternType { kind, witness })
}

/// Number of paths `x - w - y` whose two edges have different colors,
/// checked against `4·Σ_w C(d(w)/2, 2)`, which holds when every color
/// class is a cycle.
pub fn rainbow_cherry_count(h: &EdgeColoredGraph) -> Result<u64> {
    let direct = cherries(h);
    let mut formula = 0u64;
    for w in 0..h.n() {
        let d = h.graph().degree(w) as u64;
        if d % 2 == 1 {
            return Err(Error::Internal(format!(
                "vertex {w} has odd degree {d}; not a union of cycles"
            )));
        }
        let m = d / 2;
        formula += 4 * (m * m.saturating_sub(1) / 2);
    }
    if direct != formula {
        return Err(Error::Internal(format!(
            "counted {direct} rainbow cherries, identity predicts {formula}"
        )));
    }
    Ok(direct)
}

fn cherries(h: &EdgeColoredGraph) -> u64 {
    let mut total = 0u64;
    for w in 0..h.n() {
        let mut per_color: BTreeMap<Color, u64> = BTreeMap::new();
        for &x in h.graph().neighbors(w) {
            *per_color.entry(h.color(w, x).expect("edge")).or_default() += 1;
        }
        let d: u64 = per_color.values().sum();
        let mono: u64 = per_color.values().map(|&c| c * c.saturating_sub(1) / 2).sum();
        total += d * d.saturating_sub(1) / 2 - mono;
    }
    total
}

/// Pair counts and the charging checks for a union of monochromatic 4-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: usize,
    pub edges: usize,
    pub small: u64,
    pub medium: u64,
    pub large: u64,
    pub cherries: u64,
    /// Every Large pair sees at least two Small pairs among its rainbow
    /// common neighbors, and no Small pair is seen by two Large pairs.
    pub charging_ok: bool,
    /// `2ℓ ≤ s`.
    pub large_bound_ok: bool,
    /// `cherries ≤ 3ℓ + 2m + s ≤ 2·C(n, 2)`.
    pub cherry_bound_ok: bool,
    /// `2e - n ≤ √2·n^{3/2}`, exactly.
    pub edge_bound_ok: bool,
    pub violations: Vec<String>,
}

impl Census {
    pub fn all_ok(&self) -> bool {
        self.charging_ok && self.large_bound_ok && self.cherry_bound_ok && self.edge_bound_ok
    }
}

pub fn pair_census(h: &EdgeColoredGraph) -> Census {
    let n = h.n();
    let mut sizes = BTreeMap::new();
    let mut large = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let rcn = rcn_unchecked(h, u, v);
            let size = PairSize::of(rcn.len());
            if size == PairSize::Large {
                large.push(((u, v), rcn));
            }
            sizes.insert((u, v), size);
        }
    }
    let count = |s: PairSize| sizes.values().filter(|&&x| x == s).count() as u64;
    let (small, medium, nlarge) = (count(PairSize::Small), count(PairSize::Medium), count(PairSize::Large));

    let mut violations = Vec::new();
    let mut claimed: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for (pair, rcn) in &large {
        let mut smalls = BTreeSet::new();
        for (i, &x) in rcn.iter().enumerate() {
            for &y in &rcn[i + 1..] {
                if sizes[&(x.min(y), x.max(y))] == PairSize::Small {
                    smalls.insert((x.min(y), x.max(y)));
                }
            }
        }
        if smalls.len() < 2 {
            violations.push(format!(
                "Large pair {pair:?} sees only {} Small pairs among {rcn:?}",
                smalls.len()
            ));
        }
        for s in smalls {
            if let Some(other) = claimed.insert(s, *pair) {
                violations.push(format!("Small pair {s:?} seen by Large pairs {other:?} and {pair:?}"));
            }
        }
    }
    let charging_ok = violations.is_empty();

    let cherries = cherries(h);
    let pairs = (n * n.saturating_sub(1) / 2) as u64;
    let large_bound_ok = 2 * nlarge <= small;
    let weighted = 3 * nlarge + 2 * medium + small;
    let cherry_bound_ok = cherries <= weighted && weighted <= 2 * pairs;
    if !large_bound_ok {
        violations.push(format!("{nlarge} Large pairs exceed half of {small} Small pairs"));
    }
    if !cherry_bound_ok {
        violations.push(format!(
            "{cherries} cherries against 3l+2m+s = {weighted} and 2·C(n,2) = {}",
            2 * pairs
        ));
    }
    let e = h.edge_count() as u128;
    let slack = 2 * e as i128 - n as i128;
    let edge_bound_ok = slack <= 0 || (slack as u128).pow(2) <= 2 * (n as u128).pow(3);
    if !edge_bound_ok {
        violations.push(format!("{e} edges exceed (sqrt(2) n^1.5 + n)/2"));
    }
    Census {
        n,
        edges: h.edge_count(),
        small,
        medium,
        large: nlarge,
        cherries,
        charging_ok,
        large_bound_ok,
        cherry_bound_ok,
        edge_bound_ok,
        violations,
    }
}

/// Sweep of all pairs of a union of monochromatic `C_k` copies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSweep {
    pub k: usize,
    /// The host is a packing of `C_k` copies with no rainbow `C_4`.
    pub preconditions: bool,
    pub max_rainbow_common: usize,
    /// 3 for `k ∈ {4, 5}`, 6 for `k ≥ 6`.
    pub bound: usize,
    pub large_pairs: usize,
    pub type1: usize,
    pub type2: usize,
    pub other: usize,
    pub violations: Vec<String>,
}

impl PairSweep {
    /// A verified host breaking a bound.
    pub fn is_counterexample(&self) -> bool {
        self.preconditions && !self.violations.is_empty()
    }
}

/// Checks the rainbow-common-neighbor bounds and, for `k ∈ {4, 5}`, the
/// admissible coloring patterns of every Large pair (`k = 4`: Type1 only).
pub fn lemma53_check(h: &EdgeColoredGraph, k: usize) -> Result<PairSweep> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!("cycle length {k} < 4")));
    }
    let preconditions = verify_packing(h, &SimpleGraph::cycle(k)).ok
        && contains_rainbow_copy(h, &SimpleGraph::cycle(4))?.is_none();
    let bound = if k <= 5 { 3 } else { 6 };
    let mut sweep = PairSweep {
        k,
        preconditions,
        max_rainbow_common: 0,
        bound,
        large_pairs: 0,
        type1: 0,
        type2: 0,
        other: 0,
        violations: Vec::new(),
    };
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            let rcn = rcn_unchecked(h, u, v);
            sweep.max_rainbow_common = sweep.max_rainbow_common.max(rcn.len());
            if rcn.len() > bound {
                sweep
                    .violations
                    .push(format!("pair ({u}, {v}) has {} rainbow common neighbors", rcn.len()));
            }
            if rcn.len() < 3 {
                continue;
            }
            sweep.large_pairs += 1;
            let kind = pattern_type(h, u, v)?.kind;
            match kind {
                PatternKind::Type1 => sweep.type1 += 1,
                PatternKind::Type2 => sweep.type2 += 1,
                PatternKind::Other => sweep.other += 1,
            }
            let allowed = match k {
                4 => kind == PatternKind::Type1,
                5 => kind != PatternKind::Other,
                _ => true,
            };
            if !allowed {
                sweep.violations.push(format!("pair ({u}, {v}) has pattern {kind:?}"));
            }
        }
    }
    Ok(sweep)
}

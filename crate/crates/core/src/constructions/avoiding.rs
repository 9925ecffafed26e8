use serde::Serialize;

use crate::error::{Error, Result};

/// A subset of `[1, N]` with no solution of
/// `x_1 + … + x_{k-1} = (k-1)·x_k` in its elements other than the
/// all-equal ones. For `k = 3` these are the 3-AP-free sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AvoidingSet {
    bound: usize,
    k: usize,
    elements: Vec<usize>,
}

impl AvoidingSet {
    /// Validates `elements` (sorted and deduplicated here) exhaustively.
    pub fn new(bound: usize, k: usize, mut elements: Vec<usize>) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!("equation arity {k} < 3")));
        }
        elements.sort_unstable();
        elements.dedup();
        if let Some(&x) = elements.iter().find(|&&x| x == 0 || x > bound) {
            return Err(Error::InvalidParameter(format!("{x} is outside [1, {bound}]")));
        }
        if let Some(sol) = find_nontrivial_solution(&elements, k) {
            return Err(Error::InvalidParameter(format!(
                "{:?} is a non-trivial solution for arity {k}",
                sol
            )));
        }
        Ok(AvoidingSet {
            bound,
            k,
            elements,
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Re-runs the exhaustive validity check.
    pub fn is_valid(&self) -> bool {
        find_nontrivial_solution(&self.elements, self.k).is_none()
    }
}

/// Returns a tuple `(x_1, …, x_k)` of elements, not all equal, with
/// `x_1 + … + x_{k-1} = (k-1)·x_k`, if one exists.
///
/// Counts ordered `(k-1)`-tuples per sum (saturating); a target
/// `(k-1)·x_k` is hit non-trivially iff more than the constant tuple
/// reaches it.
pub fn find_nontrivial_solution(elements: &[usize], k: usize) -> Option<Vec<usize>> {
    let &max = elements.last()?;
    let terms = k - 1;
    let top = terms * max;
    let mut ways = vec![vec![0u64; top + 1]; terms + 1];
    ways[0][0] = 1;
    for j in 1..=terms {
        let (prev, cur) = ways.split_at_mut(j);
        let (prev, cur) = (&prev[j - 1], &mut cur[0]);
        for (s, &w) in prev.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for &x in elements {
                if s + x <= top {
                    cur[s + x] = cur[s + x].saturating_add(w);
                }
            }
        }
    }
    let xk = *elements
        .iter()
        .find(|&&x| ways[terms][terms * x] >= 2)?;
    let mut tuple = Vec::with_capacity(k);
    if !witness(elements, &ways, terms, terms * xk, xk, false, &mut tuple) {
        unreachable!("a second tuple exists by the count");
    }
    tuple.push(xk);
    Some(tuple)
}

fn witness(
    elements: &[usize],
    ways: &[Vec<u64>],
    remaining: usize,
    sum: usize,
    xk: usize,
    deviated: bool,
    out: &mut Vec<usize>,
) -> bool {
    if remaining == 0 {
        return sum == 0 && deviated;
    }
    for &x in elements {
        if x <= sum && ways[remaining - 1][sum - x] > 0 {
            out.push(x);
            if witness(elements, ways, remaining - 1, sum - x, xk, deviated || x != xk, out) {
                return true;
            }
            out.pop();
        }
    }
    false
}

/// Behrend-type seed: numbers `1 + a_0 + a_1·d` with `d = ⌈√N⌉`, digits
/// below `d/2` (so sums never carry) and `a_0² + a_1²` equal to the most
/// popular radius. Points on a sphere contain no 3-AP.
pub fn behrend_sphere_set(bound: usize) -> Vec<usize> {
    if bound == 0 {
        return Vec::new();
    }
    let mut d = 1;
    while d * d < bound {
        d += 1;
    }
    let digit_max = (d - 1) / 2;
    let mut by_radius: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for a1 in 0..=digit_max {
        for a0 in 0..=digit_max {
            let x = 1 + a0 + a1 * d;
            if x <= bound {
                by_radius.entry(a0 * a0 + a1 * a1).or_default().push(x);
            }
        }
    }
    let mut best: Vec<usize> = Vec::new();
    for set in by_radius.into_values() {
        if set.len() > best.len() {
            best = set;
        }
    }
    best.sort_unstable();
    best
}

/// Adds every `x ∈ [1, N]` (in increasing order) that keeps the set valid.
fn greedy_extend(mut elements: Vec<usize>, bound: usize, k: usize) -> Vec<usize> {
    for x in 1..=bound {
        if let Err(pos) = elements.binary_search(&x) {
            elements.insert(pos, x);
            if find_nontrivial_solution(&elements, k).is_some() {
                elements.remove(pos);
            }
        }
    }
    elements
}

/// A valid avoiding set in `[1, N]`: for `k = 3` the Behrend sphere seed
/// greedily extended, otherwise a greedy scan of `[1, N]`.
pub fn avoiding_set(bound: usize, k: usize) -> Result<AvoidingSet> {
    if bound == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    if k < 3 {
        return Err(Error::InvalidParameter(format!("equation arity {k} < 3")));
    }
    let seed = if k == 3 { behrend_sphere_set(bound) } else { Vec::new() };
    let elements = greedy_extend(seed, bound, k);
    AvoidingSet::new(bound, k, elements)
        .map_err(|e| Error::Internal(format!("greedy avoiding set failed validation: {e}")))
}

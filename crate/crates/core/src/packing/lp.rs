use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PackingProblem;
use crate::error::{Error, Result};

/// Cap on simplex pivots.
pub const LP_PIVOT_LIMIT: usize = 200_000;

/// Non-negative weight per copy with every edge load at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalPacking {
    pub weights: Vec<BigRational>,
}

impl FractionalPacking {
    pub fn total(&self) -> BigRational {
        self.weights.iter().fold(BigRational::zero(), |acc, w| acc + w)
    }

    /// Largest edge load, or zero without edges.
    pub fn max_load(&self, p: &PackingProblem) -> BigRational {
        loads(p, &self.weights).into_iter().max().unwrap_or_else(BigRational::zero)
    }
}

fn loads(p: &PackingProblem, weights: &[BigRational]) -> Vec<BigRational> {
    p.incidence()
        .iter()
        .map(|cs| cs.iter().fold(BigRational::zero(), |acc, &c| acc + &weights[c]))
        .collect()
}

/// Optimal fractional packing with a dual certificate: edge prices
/// `y ≥ 0` with price at least one on every copy and total price equal to
/// the primal value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: BigRational,
    pub primal: FractionalPacking,
    pub dual: Vec<BigRational>,
    pub pivots: usize,
}

impl LpSolution {
    pub fn floor_value(&self) -> usize {
        let q = self.value.floor().to_integer();
        usize::try_from(q).expect("LP value fits in usize")
    }

    /// Re-checks primal feasibility, dual feasibility and equal objective
    /// values from scratch.
    pub fn certify(&self, p: &PackingProblem) -> Result<()> {
        let one = BigRational::one();
        if self.primal.weights.len() != p.copies().len() || self.dual.len() != p.edges().len() {
            return Err(Error::Internal("certificate has the wrong shape".into()));
        }
        if self.primal.weights.iter().any(Signed::is_negative) {
            return Err(Error::Internal("negative primal weight".into()));
        }
        if let Some(e) = loads(p, &self.primal.weights).iter().position(|l| *l > one) {
            return Err(Error::Internal(format!("edge {} overloaded", p.edges()[e])));
        }
        if self.dual.iter().any(Signed::is_negative) {
            return Err(Error::Internal("negative edge price".into()));
        }
        for (c, ce) in p.copy_edges().iter().enumerate() {
            let price = ce.iter().fold(BigRational::zero(), |acc, &e| acc + &self.dual[e]);
            if price < one {
                return Err(Error::Internal(format!("copy {c} priced below one")));
            }
        }
        let primal = self.primal.total();
        let dual = self.dual.iter().fold(BigRational::zero(), |acc, y| acc + y);
        if primal != self.value || dual != self.value {
            return Err(Error::Internal(format!(
                "objectives differ: primal {primal}, dual {dual}, reported {}",
                self.value
            )));
        }
        Ok(())
    }
}

/// Fraction-free tableau: the true entries are `cells / denom`.
struct Tableau {
    rows: usize,
    cols: usize,
    /// `rows + 1` rows (the last is the objective) of `cols + 1` entries
    /// (the last is the right-hand side).
    cells: Vec<BigInt>,
    denom: BigInt,
    basis: Vec<usize>,
}

impl Tableau {
    fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.cells[r * (self.cols + 1) + c]
    }

    /// Integer-preserving pivot: every entry is replaced by
    /// `(p·a - b·c) / denom`, which divides exactly.
    fn pivot(&mut self, r: usize, s: usize) {
        let w = self.cols + 1;
        let p = self.at(r, s).clone();
        let pivot_row: Vec<BigInt> = self.cells[r * w..(r + 1) * w].to_vec();
        for i in 0..=self.rows {
            if i == r {
                continue;
            }
            let factor = self.cells[i * w + s].clone();
            let row = &mut self.cells[i * w..(i + 1) * w];
            for (j, cell) in row.iter_mut().enumerate() {
                let mut v = &*cell * &p;
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                if !self.denom.is_one() {
                    let (q, rem) = v.div_rem(&self.denom);
                    debug_assert!(rem.is_zero(), "fraction-free pivot divides exactly");
                    v = q;
                }
                *cell = v;
            }
        }
        self.denom = p;
        self.basis[r] = s;
    }
}

/// Maximizes the total weight subject to edge loads at most one, by the
/// primal simplex on the slack basis with Bland's rule.
pub fn fractional_packing_lp(p: &PackingProblem) -> Result<LpSolution> {
    let m = p.edges().len();
    let k = p.copies().len();
    let cols = k + m;
    let w = cols + 1;
    let mut cells = vec![BigInt::zero(); (m + 1) * w];
    for (c, ce) in p.copy_edges().iter().enumerate() {
        for &e in ce {
            cells[e * w + c] = BigInt::one();
        }
    }
    for e in 0..m {
        cells[e * w + k + e] = BigInt::one();
        cells[e * w + cols] = BigInt::one();
    }
    for c in 0..k {
        cells[m * w + c] = BigInt::from(-1);
    }
    let mut t = Tableau {
        rows: m,
        cols,
        cells,
        denom: BigInt::one(),
        basis: (k..k + m).collect(),
    };
    let mut pivots = 0;
    loop {
        let entering = (0..cols).find(|&j| t.at(m, j).sign() == Sign::Minus);
        let Some(s) = entering else { break };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t.at(i, s).sign() != Sign::Plus {
                continue;
            }
            leave = Some(match leave {
                None => i,
                Some(r) => {
                    // compare rhs_i / a_is against rhs_r / a_rs
                    let lhs = t.at(i, cols) * t.at(r, s);
                    let rhs = t.at(r, cols) * t.at(i, s);
                    if lhs < rhs || (lhs == rhs && t.basis[i] < t.basis[r]) {
                        i
                    } else {
                        r
                    }
                }
            });
        }
        let r = leave.ok_or_else(|| Error::Internal("packing LP is unbounded".into()))?;
        t.pivot(r, s);
        pivots += 1;
        if pivots > LP_PIVOT_LIMIT {
            return Err(Error::limit("simplex pivots"));
        }
    }
    let frac = |x: &BigInt| BigRational::new(x.clone(), t.denom.clone());
    let mut weights = vec![BigRational::zero(); k];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < k {
            weights[b] = frac(t.at(i, cols));
        }
    }
    let dual = (0..m).map(|e| frac(t.at(m, k + e))).collect();
    let sol = LpSolution {
        value: frac(t.at(m, cols)),
        primal: FractionalPacking { weights },
        dual,
        pivots,
    };
    sol.certify(p)?;
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::packing::PackingLimits;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn k4_triangles() {
        let p = PackingProblem::new(
            &SimpleGraph::complete(4),
            &SimpleGraph::cycle(3),
            PackingLimits::default(),
        )
        .unwrap();
        let sol = fractional_packing_lp(&p).unwrap();
        assert_eq!(sol.value, rat(2, 1));
        assert!(sol.primal.weights.iter().all(|w| *w == rat(1, 2)));
        // optimal prices are not unique, but every triangle is priced exactly one
        for ce in p.copy_edges() {
            let price = ce.iter().fold(rat(0, 1), |acc, &e| acc + &sol.dual[e]);
            assert_eq!(price, rat(1, 1));
        }
    }

    #[test]
    fn single_cycle() {
        for k in 3..8 {
            let p = PackingProblem::new(
                &SimpleGraph::cycle(k),
                &SimpleGraph::cycle(k),
                PackingLimits::default(),
            )
            .unwrap();
            assert_eq!(fractional_packing_lp(&p).unwrap().value, rat(1, 1));
        }
    }

    #[test]
    fn certificate_rejects_tampering() {
        let p = PackingProblem::new(
            &SimpleGraph::complete(5),
            &SimpleGraph::cycle(3),
            PackingLimits::default(),
        )
        .unwrap();
        let sol = fractional_packing_lp(&p).unwrap();
        assert_eq!(sol.value, rat(10, 3));
        let mut bad = sol.clone();
        bad.dual[0] = rat(0, 1);
        assert!(bad.certify(&p).is_err());
        let mut bad = sol;
        bad.primal.weights[0] += rat(1, 1);
        assert!(bad.certify(&p).is_err());
    }
}

use serde::Serialize;

use crate::constructions::{
    avoiding_set, c4_lower_bound_instance, cycle_blowup_decomposition, ruzsa_host,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeColoredGraph, Packing, SimpleGraph};
use crate::verify::{contains_rainbow_copy, verify_packing};

/// Constructions that certify a lower bound on the multicolor number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Construction {
    /// Progression cycles on `k(k+1)N/2` vertices, forbidding `C_k`.
    Ruzsa { k: usize, bound: usize },
    /// 2-blow-up of the polarity graph over GF(q), forbidding `C_4`.
    ErBlowup { q: usize },
    /// `C_k(t)` split into `t²` copies of `C_k`, forbidding `C_{k-2}`
    /// (odd `k ≥ 5`).
    CycleBlowup { k: usize, t: usize },
}

#[derive(Debug, Clone)]
pub struct ConstructionBound {
    pub construction: Construction,
    pub n: usize,
    pub pattern: SimpleGraph,
    pub forbidden: SimpleGraph,
    pub value: usize,
    pub witness: EdgeColoredGraph,
    pub packing: Packing,
}

/// Builds the construction, checks it is a packing of its pattern with no
/// rainbow copy of `forbidden` (the construction's own target unless
/// overridden), and returns its size.
pub fn lower_bound_from_construction(
    construction: Construction,
    forbidden: Option<&SimpleGraph>,
) -> Result<ConstructionBound> {
    let (pattern, target, witness, packing) = match construction {
        Construction::Ruzsa { k, bound } => {
            let set = avoiding_set(bound, k)?;
            let inst = ruzsa_host(k, bound, &set)?;
            (
                SimpleGraph::cycle(k),
                SimpleGraph::cycle(k),
                inst.colored().clone(),
                inst.packing().clone(),
            )
        }
        Construction::ErBlowup { q } => {
            let inst = c4_lower_bound_instance(q)?;
            (SimpleGraph::cycle(4), SimpleGraph::cycle(4), inst.colored, inst.packing)
        }
        Construction::CycleBlowup { k, t } => {
            if k < 5 || k % 2 == 0 {
                return Err(Error::InvalidParameter(format!(
                    "cycle blow-up bound needs odd k >= 5, got {k}"
                )));
            }
            let d = cycle_blowup_decomposition(k, t)?;
            (
                SimpleGraph::cycle(k),
                SimpleGraph::cycle(k - 2),
                d.to_colored()?,
                d.to_packing(),
            )
        }
    };
    let forbidden = forbidden.cloned().unwrap_or(target);
    let report = verify_packing(&witness, &pattern);
    if !report.ok {
        return Err(Error::ConstructionBug(format!(
            "{construction:?} is not a packing: {:?}",
            report.offender
        )));
    }
    if let Some(w) = contains_rainbow_copy(&witness, &forbidden)? {
        return Err(Error::ConstructionBug(format!(
            "{construction:?} contains a rainbow copy at {:?}",
            w.images
        )));
    }
    Ok(ConstructionBound {
        construction,
        n: witness.n(),
        pattern,
        forbidden,
        value: report.classes,
        witness,
        packing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let b = lower_bound_from_construction(Construction::ErBlowup { q: 2 }, None).unwrap();
        assert_eq!((b.n, b.value), (14, 9));
        let b = lower_bound_from_construction(Construction::Ruzsa { k: 3, bound: 2 }, None).unwrap();
        assert_eq!((b.n, b.value), (12, 4));
        let b = lower_bound_from_construction(Construction::CycleBlowup { k: 5, t: 2 }, None).unwrap();
        assert_eq!((b.n, b.value), (10, 4));
        // the polarity graph has triangles, whose blow-ups are rainbow
        let err = lower_bound_from_construction(
            Construction::ErBlowup { q: 2 },
            Some(&SimpleGraph::cycle(3)),
        );
        assert!(matches!(err, Err(Error::ConstructionBug(_))));
    }
}

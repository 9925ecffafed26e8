use mct_core::graph::io::{write_certificate, write_colored};
use mct_core::graph::SimpleGraph;
use mct_core::packing::{
    ex_multicolor_exact, fractional_packing_lp, OracleLimits, PackingLimits, PackingProblem,
};

use super::{load_pattern, pattern_key, sidecar, write_text, Outcome};
use crate::output::Record;
use crate::{OracleArgs, Result};

pub(super) fn run(args: &OracleArgs) -> Result<Outcome> {
    let mut out = Outcome::new();
    let f = load_pattern(&args.pattern)?;
    let g = load_pattern(&args.forbidden)?;
    let mut limits = OracleLimits {
        max_n: args.limit_n,
        ..OracleLimits::default()
    };
    if let Some(c) = args.limit_copies {
        limits.max_copies = c;
    }
    let (fk, gk) = (pattern_key(&args.pattern), pattern_key(&args.forbidden));
    out.param("n", args.n);
    out.param("pattern", fk.clone());
    out.param("forbidden", gk.clone());
    out.value("n", args.n);
    out.value("pattern", fk.clone());
    out.value("forbidden", gk.clone());
    let mut record = Record::new("oracle")
        .with("n", args.n)
        .with("pattern", fk)
        .with("forbidden", gk);
    match ex_multicolor_exact(args.n, &f, &g, limits) {
        Ok(r) => {
            if let Some(path) = &args.out {
                write_text(path, &write_colored(&r.witness))?;
                let cert = sidecar(path);
                write_text(&cert, &write_certificate(&r.packing))?;
                out.outputs.push(path.clone());
                out.outputs.push(cert);
            }
            out.value("oracle_value", r.value);
            out.value("exact", true);
            record = record
                .with("value", r.value)
                .with("exact", true)
                .with("families_per_level", r.families_per_level);
        }
        Err(mct_core::Error::ResourceLimit { what, lower, upper }) => {
            out.ok = false;
            out.value("exact", false);
            out.value("bracket_lower", lower);
            out.value("bracket_upper", upper);
            record = record
                .with("exact", false)
                .with("reason", what)
                .with("lower", lower)
                .with("upper", upper);
        }
        Err(err) => return Err(err.into()),
    }
    if let Some(lp) = complete_host_lp(args.n, &f)? {
        out.value("lp_value", lp.clone());
        record = record.with("lp_value", lp);
    }
    out.records.push(record);
    Ok(out)
}

/// Fractional packing number of the pattern in `K_n`, an upper bound.
fn complete_host_lp(n: usize, f: &SimpleGraph) -> Result<Option<String>> {
    let p = PackingProblem::new(&SimpleGraph::complete(n), f, PackingLimits::default())?;
    if p.copies().is_empty() {
        return Ok(Some("0".into()));
    }
    Ok(Some(fractional_packing_lp(&p)?.value.to_string()))
}

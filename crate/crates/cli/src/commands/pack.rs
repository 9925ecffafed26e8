use mct_core::graph::io::{write_certificate, write_colored};
use mct_core::packing::{fractional_packing_lp, max_packing_exact, PackingLimits, PackingProblem};
use num_rational::BigRational;
use serde_json::{json, Value};

use super::{load_pattern, pattern_key, read_host, sidecar, write_text, Outcome};
use crate::output::Record;
use crate::{PackArgs, PackMode, Result};

pub(super) fn run(args: &PackArgs) -> Result<Outcome> {
    let mut out = Outcome::new();
    let (host, _) = read_host(&args.input)?;
    let pattern = load_pattern(&args.pattern)?;
    let mut limits = PackingLimits::default();
    if let Some(c) = args.limit_copies {
        limits.max_copies = c;
    }
    if let Some(nodes) = args.limit_nodes {
        limits.max_nodes = nodes;
    }
    out.inputs.push(args.input.clone());
    out.param("input", args.input.display().to_string());
    out.param("pattern", pattern_key(&args.pattern));
    out.param("mode", format!("{:?}", args.mode).to_lowercase());
    out.value("n", host.n());
    out.value("pattern", pattern_key(&args.pattern));
    let p = PackingProblem::new(&host, &pattern, limits)?;
    out.records.push(
        Record::new("host")
            .with("n", host.n())
            .with("edges", host.edge_count())
            .with("copies", p.copies().len())
            .with("edge_bound", p.edge_bound()),
    );
    let mut integral = None;
    if args.mode != PackMode::Fractional {
        match max_packing_exact(&p, limits) {
            Ok(sol) => {
                if let Some(path) = &args.out {
                    let packing = sol.to_packing(&p);
                    write_text(path, &write_colored(&packing.to_colored_graph(host.n())?))?;
                    let cert = sidecar(path);
                    write_text(&cert, &write_certificate(&packing))?;
                    out.outputs.push(path.clone());
                    out.outputs.push(cert);
                }
                out.value("integral", sol.value);
                out.records.push(
                    Record::new("integral")
                        .with("value", sol.value)
                        .with("nodes", sol.nodes)
                        .with("chosen", sol.chosen.iter().map(|&i| p.copies()[i].images.clone()).collect::<Vec<_>>()),
                );
                integral = Some(sol.value);
            }
            Err(mct_core::Error::ResourceLimit { what, lower, upper }) => {
                out.ok = false;
                out.value("integral_lower", lower);
                out.value("integral_upper", upper);
                out.records.push(
                    Record::new("integral")
                        .with("exact", false)
                        .with("reason", what)
                        .with("lower", lower)
                        .with("upper", upper),
                );
            }
            Err(err) => return Err(err.into()),
        }
    }
    if args.mode != PackMode::Integral {
        if p.copies().is_empty() {
            out.value("fractional", "0");
            out.records.push(Record::new("fractional").with("value", "0").with("certified", true));
        } else {
            let lp = fractional_packing_lp(&p)?;
            lp.certify(&p)?;
            let weights: Vec<Value> = lp
                .primal
                .weights
                .iter()
                .enumerate()
                .filter(|(_, w)| **w != BigRational::from_integer(0.into()))
                .map(|(i, w)| json!([p.copies()[i].images, w.to_string()]))
                .collect();
            let dual: Vec<Value> = lp
                .dual
                .iter()
                .enumerate()
                .filter(|(_, y)| **y != BigRational::from_integer(0.into()))
                .map(|(e, y)| json!([p.edges()[e].0, p.edges()[e].1, y.to_string()]))
                .collect();
            if let Some(nu) = integral {
                let nu = BigRational::from_integer(nu.into());
                let bound = BigRational::new(host.edge_count().into(), pattern.edge_count().into());
                let sandwich = nu <= lp.value && lp.value <= bound;
                out.ok &= sandwich;
                out.value("sandwich", sandwich);
            }
            out.value("fractional", lp.value.to_string());
            out.records.push(
                Record::new("fractional")
                    .with("value", lp.value.to_string())
                    .with("pivots", lp.pivots)
                    .with("certified", true)
                    .with("weights", weights)
                    .with("dual", dual),
            );
        }
    }
    Ok(out)
}

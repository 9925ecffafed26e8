use std::fmt::Write as _;
use std::path::PathBuf;

use mct_core::constructions::{
    avoiding_set, cycle_blowup_decomposition, prime_blowup_decomposition, theorem1_host,
    DecompositionCertificate,
};
use mct_core::graph::io::{write_certificate, write_colored, write_graph};
use mct_core::graph::SimpleGraph;
use mct_core::packing::{lower_bound_from_construction, Construction, ConstructionBound};
use mct_core::verify::verify_packing;

use super::{load_pattern, pattern_key, require, sidecar, write_text, Outcome};
use crate::output::Record;
use crate::{CliError, ConstructArgs, ConstructionName, Result};

pub(super) fn run(args: &ConstructArgs) -> Result<Outcome> {
    let mut out = Outcome::new();
    let name = args.name;
    let label = match name {
        ConstructionName::PrimeBlowup => "prime-blowup",
        ConstructionName::CycleBlowup => "cycle-blowup",
        ConstructionName::Ruzsa => "ruzsa",
        ConstructionName::Theorem1 => "theorem1",
        ConstructionName::ErBlowup => "er-blowup",
        ConstructionName::AvoidingSet => "avoiding-set",
    };
    out.param("name", label);
    match name {
        ConstructionName::PrimeBlowup => {
            let spec = args
                .pattern
                .as_deref()
                .ok_or_else(|| CliError::Usage("prime-blowup needs --pattern".into()))?;
            let s = require(args.s, "--s", "prime-blowup")?;
            out.param("pattern", pattern_key(spec));
            out.param("s", s);
            let d = prime_blowup_decomposition(&load_pattern(spec)?, s)?;
            decomposition(&mut out, label, &d, args.out.as_ref())?;
        }
        ConstructionName::CycleBlowup => {
            let k = require(args.k, "--k", "cycle-blowup")?;
            let t = require(args.t, "--t", "cycle-blowup")?;
            out.param("k", k);
            out.param("t", t);
            let d = cycle_blowup_decomposition(k, t)?;
            decomposition(&mut out, label, &d, args.out.as_ref())?;
            if k >= 5 && k % 2 == 1 {
                let b = lower_bound_from_construction(Construction::CycleBlowup { k, t }, None)?;
                lower_bound(&mut out, label, &b);
            }
        }
        ConstructionName::Ruzsa => {
            let k = require(args.k, "--k", "ruzsa")?;
            let bound = require(args.bound, "--N", "ruzsa")?;
            out.param("k", k);
            out.param("N", bound);
            let set = avoiding_set(bound, k)?;
            let b = lower_bound_from_construction(Construction::Ruzsa { k, bound }, None)?;
            bound_files(&mut out, label, &b, args.out.as_ref())?;
            out.records.push(
                Record::new("avoiding-set")
                    .with("N", bound)
                    .with("k", k)
                    .with("size", set.len())
                    .with("elements", set.elements().to_vec()),
            );
            lower_bound(&mut out, label, &b);
        }
        ConstructionName::ErBlowup => {
            let q = require(args.q, "--q", "er-blowup")?;
            out.param("q", q);
            let b = lower_bound_from_construction(Construction::ErBlowup { q }, None)?;
            bound_files(&mut out, label, &b, args.out.as_ref())?;
            lower_bound(&mut out, label, &b);
        }
        ConstructionName::Theorem1 => {
            let spec = args
                .pattern
                .as_deref()
                .ok_or_else(|| CliError::Usage("theorem1 needs --pattern".into()))?;
            let u = require(args.u, "--u", "theorem1")?;
            let v = require(args.v, "--v", "theorem1")?;
            let n = require(args.n, "--n", "theorem1")?;
            out.param("pattern", pattern_key(spec));
            out.param("u", u);
            out.param("v", v);
            out.param("n", n);
            theorem1(&mut out, &load_pattern(spec)?, u, v, n, args.out.as_ref())?;
        }
        ConstructionName::AvoidingSet => {
            let bound = require(args.bound, "--N", "avoiding-set")?;
            let k = require(args.k, "--k", "avoiding-set")?;
            out.param("N", bound);
            out.param("k", k);
            let set = avoiding_set(bound, k)?;
            let valid = set.is_valid();
            if let Some(path) = &args.out {
                let body: String = set.elements().iter().map(|x| format!("{x}\n")).collect();
                write_text(path, &body)?;
                let cert = sidecar(path);
                let stamp = format!(
                    "avoiding-set N {bound} k {k} size {}\nvalid {}\n",
                    set.len(),
                    if valid { "exhaustive" } else { "no" }
                );
                write_text(&cert, &stamp)?;
                out.outputs.push(path.clone());
                out.outputs.push(cert);
            }
            out.value("size", set.len());
            out.value("valid", valid);
            out.ok = valid;
            out.records.push(
                Record::new(label)
                    .with("N", bound)
                    .with("k", k)
                    .with("size", set.len())
                    .with("valid", valid)
                    .with("elements", set.elements().to_vec()),
            );
        }
    }
    Ok(out)
}

fn write_pair(out: &mut Outcome, path: Option<&PathBuf>, graph: String, cert: String) -> Result<()> {
    if let Some(path) = path {
        write_text(path, &graph)?;
        let cert_path = sidecar(path);
        write_text(&cert_path, &cert)?;
        out.outputs.push(path.clone());
        out.outputs.push(cert_path);
    }
    Ok(())
}

fn decomposition(
    out: &mut Outcome,
    label: &str,
    d: &DecompositionCertificate,
    path: Option<&PathBuf>,
) -> Result<()> {
    d.check()?;
    let h = d.to_colored()?;
    let report = verify_packing(&h, d.pattern());
    write_pair(out, path, write_colored(&h), write_certificate(&d.to_packing()))?;
    out.ok = report.ok && d.is_complete();
    out.value("n", h.n());
    out.value("edges", h.edge_count());
    out.value("copies", d.parts().len());
    out.value("complete", d.is_complete());
    out.records.push(
        Record::new(label)
            .with("n", h.n())
            .with("edges", h.edge_count())
            .with("copies", d.parts().len())
            .with("complete", d.is_complete())
            .with("verified", report.ok),
    );
    Ok(())
}

fn bound_files(out: &mut Outcome, label: &str, b: &ConstructionBound, path: Option<&PathBuf>) -> Result<()> {
    write_pair(out, path, write_colored(&b.witness), write_certificate(&b.packing))?;
    out.value("n", b.n);
    out.value("edges", b.witness.edge_count());
    out.value("copies", b.value);
    out.records.push(
        Record::new(label)
            .with("n", b.n)
            .with("edges", b.witness.edge_count())
            .with("copies", b.value)
            .with("packing", "pass")
            .with("rainbow_free", "pass"),
    );
    Ok(())
}

fn cycle_name(g: &SimpleGraph) -> String {
    format!("C{}", g.n())
}

fn lower_bound(out: &mut Outcome, label: &str, b: &ConstructionBound) {
    out.value("pattern", cycle_name(&b.pattern));
    out.value("forbidden", cycle_name(&b.forbidden));
    out.value("lower_bound", b.value);
    out.value("source", label);
    out.records.push(
        Record::new("lower-bound")
            .with("n", b.n)
            .with("pattern", cycle_name(&b.pattern))
            .with("forbidden", cycle_name(&b.forbidden))
            .with("value", b.value),
    );
}

fn theorem1(
    out: &mut Outcome,
    f: &SimpleGraph,
    u: usize,
    v: usize,
    n: usize,
    path: Option<&PathBuf>,
) -> Result<()> {
    let t = theorem1_host(f, u, v, n)?;
    let s = &t.summary;
    let mut cert = format!("parts {}\n", t.partition.classes().len());
    for class in t.partition.classes() {
        let _ = writeln!(cert, "part {}", join(class));
    }
    let _ = writeln!(cert, "copies {}", s.copies);
    let _ = writeln!(cert, "weight {}", s.weight);
    let _ = writeln!(cert, "total {}", s.total);
    let _ = writeln!(cert, "target {} {} edges {}", s.target_pair.0, s.target_pair.1, s.target_edges);
    for l in &s.loads {
        let _ = writeln!(
            cert,
            "load {} {} edges {} copies {}..{} load {}..{}",
            l.parts.0, l.parts.1, l.edges, l.min_copies, l.max_copies, l.min_load, l.max_load
        );
    }
    write_pair(out, path, write_graph(&t.host), cert)?;
    let one = num_one();
    let max_load = s.loads.iter().map(|l| l.max_load.clone()).max().unwrap_or_default();
    let target = s.loads.iter().find(|l| l.parts == s.target_pair);
    let saturated = target.is_some_and(|l| l.min_load == one && l.max_load == one);
    let total_ok = s.total == num_rational::BigRational::from_integer(s.target_edges.into());
    out.ok = max_load <= one && saturated && total_ok;
    let sizes: Vec<usize> = t.partition.classes().iter().map(Vec::len).collect();
    out.value("n", n);
    out.value("total", s.total.to_string());
    out.value("target_edges", s.target_edges);
    out.value("max_load", max_load.to_string());
    out.records.push(
        Record::new("theorem1")
            .with("n", n)
            .with("edges", t.host.edge_count())
            .with("part_sizes", sizes)
            .with("copies", s.copies)
            .with("weight", s.weight.to_string())
            .with("total", s.total.to_string())
            .with("target_pair", vec![s.target_pair.0, s.target_pair.1])
            .with("target_edges", s.target_edges)
            .with("max_load", max_load.to_string())
            .with("target_saturated", saturated),
    );
    Ok(())
}

fn num_one() -> num_rational::BigRational {
    num_rational::BigRational::from_integer(1.into())
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

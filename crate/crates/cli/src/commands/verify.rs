use mct_core::graph::io::parse_certificate;
use mct_core::graph::{canonical_form, EdgeColoredGraph, SimpleGraph};
use mct_core::verify::{
    contains_rainbow_copy, lemma53_check, pair_census, partition_witness, rainbow_cherry_count,
    verify_packing,
};

use super::{load_pattern, pattern_key, read_colored, read_text, sidecar, Outcome};
use crate::output::Record;
use crate::{Check, CliError, Result, VerifyArgs};

pub(super) fn run(args: &VerifyArgs, seed: Option<u64>) -> Result<Outcome> {
    let mut out = Outcome::new();
    let h = read_colored(&args.input)?;
    let pattern = load_pattern(&args.pattern)?;
    let forbidden = args.forbidden.as_deref().map(load_pattern).transpose()?;
    let cert = sidecar(&args.input);
    let mut checks = args.checks.clone();
    if checks.is_empty() {
        checks.push(Check::Packing);
        if forbidden.is_some() {
            checks.push(Check::Rainbow);
        }
        if cert.is_file() {
            checks.push(Check::Certificate);
        }
    }
    checks.sort_unstable();
    checks.dedup();
    if checks.contains(&Check::Witness) && seed.is_none() {
        return Err(CliError::Usage("the witness check needs --seed".into()));
    }
    if checks.contains(&Check::Rainbow) && forbidden.is_none() {
        return Err(CliError::Usage("the rainbow check needs --forbidden".into()));
    }
    out.inputs.push(args.input.clone());
    out.param("input", args.input.display().to_string());
    out.param("pattern", pattern_key(&args.pattern));
    if let Some(g) = &args.forbidden {
        out.param("forbidden", pattern_key(g));
    }
    out.param(
        "checks",
        checks.iter().map(|c| format!("{c:?}").to_lowercase()).collect::<Vec<_>>(),
    );
    for check in checks {
        let record = match check {
            Check::Packing => packing(&h, &pattern),
            Check::Certificate => {
                out.inputs.push(cert.clone());
                certificate(&h, &read_text(&cert)?)
            }
            Check::Rainbow => rainbow(&h, forbidden.as_ref().expect("checked above"))?,
            Check::Census => census(&h),
            Check::Cherries => cherries(&h),
            Check::Lemma53 => lemma53(&h, &pattern)?,
            Check::Witness => witness(&h, &pattern, seed.expect("checked above"), args.max_tries)?,
        };
        let pass = record.get("pass") == Some(&serde_json::Value::Bool(true));
        out.ok &= pass;
        out.value(&record.label["check ".len()..], pass);
        out.records.push(record);
    }
    Ok(out)
}

fn check(name: &str, pass: bool) -> Record {
    Record::new(format!("check {name}")).with("pass", pass)
}

fn packing(h: &EdgeColoredGraph, pattern: &SimpleGraph) -> Record {
    let report = verify_packing(h, pattern);
    let mut r = check("packing", report.ok).with("classes", report.classes);
    if let Some(issue) = report.offender {
        r = r.with("color", issue.color).with("reason", issue.reason);
    }
    r
}

fn certificate(h: &EdgeColoredGraph, text: &str) -> Record {
    match parse_certificate(text).and_then(|p| p.to_colored_graph(h.n()).map(|g| (p.len(), g))) {
        Ok((copies, g)) => check("certificate", g == *h).with("copies", copies),
        Err(err) => check("certificate", false).with("reason", err.to_string()),
    }
}

fn rainbow(h: &EdgeColoredGraph, g: &SimpleGraph) -> Result<Record> {
    Ok(match contains_rainbow_copy(h, g)? {
        None => check("rainbow", true),
        Some(emb) => check("rainbow", false).with("witness", emb.images),
    })
}

fn census(h: &EdgeColoredGraph) -> Record {
    let c = pair_census(h);
    let mut r = check("census", c.all_ok())
        .with("small", c.small)
        .with("medium", c.medium)
        .with("large", c.large)
        .with("cherries", c.cherries)
        .with("edges", c.edges);
    if !c.violations.is_empty() {
        r = r.with("violations", c.violations);
    }
    r
}

fn cherries(h: &EdgeColoredGraph) -> Record {
    match rainbow_cherry_count(h) {
        Ok(count) => check("cherries", true).with("count", count),
        Err(err) => check("cherries", false).with("reason", err.to_string()),
    }
}

fn lemma53(h: &EdgeColoredGraph, pattern: &SimpleGraph) -> Result<Record> {
    let k = pattern.n();
    if k < 4 || canonical_form(pattern, None) != canonical_form(&SimpleGraph::cycle(k), None) {
        return Err(CliError::Usage("the lemma53 check needs a cycle pattern of length at least 4".into()));
    }
    let s = lemma53_check(h, k)?;
    let mut r = check("lemma53", s.preconditions && s.violations.is_empty())
        .with("preconditions", s.preconditions)
        .with("max_rainbow_common", s.max_rainbow_common)
        .with("bound", s.bound)
        .with("large_pairs", s.large_pairs)
        .with("type1", s.type1)
        .with("type2", s.type2)
        .with("other", s.other);
    if !s.violations.is_empty() {
        r = r.with("violations", s.violations);
    }
    Ok(r)
}

fn witness(h: &EdgeColoredGraph, pattern: &SimpleGraph, seed: u64, max_tries: usize) -> Result<Record> {
    match partition_witness(h, pattern, seed, max_tries) {
        Ok(w) => Ok(check("witness", true)
            .with("aligned", w.aligned.len())
            .with("required", w.required)
            .with("tries", w.tries)
            .with("bijection", w.bijection)
            .with("classes", w.partition.classes().to_vec())),
        Err(mct_core::Error::ResourceLimit { what, lower, .. }) => Ok(check("witness", false)
            .with("reason", what)
            .with("best_aligned", lower)),
        Err(err) => Ok(check("witness", false).with("reason", err.to_string())),
    }
}

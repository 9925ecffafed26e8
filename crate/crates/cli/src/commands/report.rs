use std::collections::BTreeMap;

use serde_json::Value;

use super::Outcome;
use crate::catalog::read_catalog;
use crate::output::Record;
use crate::{ReportArgs, Result};

#[derive(Debug, Default)]
struct Row {
    lower: Option<(u64, String)>,
    oracle: Option<u64>,
    lp: Option<String>,
}

pub(super) fn run(args: &ReportArgs) -> Result<Outcome> {
    let mut out = Outcome::new();
    out.inputs.push(args.catalog_file.clone());
    out.param("catalog", args.catalog_file.display().to_string());
    let mut rows: BTreeMap<(u64, String, String), Row> = BTreeMap::new();
    for rec in read_catalog(&args.catalog_file)? {
        let v = &rec.values;
        let (Some(n), Some(f), Some(g)) = (
            v.get("n").and_then(Value::as_u64),
            v.get("pattern").and_then(Value::as_str),
            v.get("forbidden").and_then(Value::as_str),
        ) else {
            continue;
        };
        let row = rows.entry((n, f.to_string(), g.to_string())).or_default();
        if let Some(lb) = v.get("lower_bound").and_then(Value::as_u64) {
            let source = v.get("source").and_then(Value::as_str).unwrap_or("construction");
            if row.lower.as_ref().is_none_or(|(best, _)| lb > *best) {
                row.lower = Some((lb, source.to_string()));
            }
        }
        if let Some(x) = v.get("oracle_value").and_then(Value::as_u64) {
            row.oracle = Some(x);
        }
        if let Some(lp) = v.get("lp_value").and_then(Value::as_str) {
            row.lp = Some(lp.to_string());
        }
    }
    let mut table = vec!["n\tF\tG\tlower_source\tlower\toracle\tlp\tconsistent".to_string()];
    let show = |x: Option<String>| x.unwrap_or_else(|| "-".into());
    for ((n, f, g), row) in &rows {
        let consistent = match (&row.lower, row.oracle) {
            (Some((lb, _)), Some(ex)) => *lb <= ex,
            _ => true,
        };
        out.ok &= consistent;
        table.push(format!(
            "{n}\t{f}\t{g}\t{}\t{}\t{}\t{}\t{consistent}",
            show(row.lower.as_ref().map(|(_, s)| s.clone())),
            show(row.lower.as_ref().map(|(b, _)| b.to_string())),
            show(row.oracle.map(|x| x.to_string())),
            show(row.lp.clone()),
        ));
        out.records.push(
            Record::new("row")
                .with("n", *n)
                .with("pattern", f.clone())
                .with("forbidden", g.clone())
                .with("lower_source", row.lower.as_ref().map(|(_, s)| s.clone()))
                .with("lower", row.lower.as_ref().map(|(b, _)| *b))
                .with("oracle", row.oracle)
                .with("lp", row.lp.clone())
                .with("consistent", consistent),
        );
    }
    out.value("rows", rows.len());
    out.table = Some(table);
    Ok(out)
}

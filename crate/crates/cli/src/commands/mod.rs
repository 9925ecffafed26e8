mod construct;
mod oracle;
mod pack;
mod report;
mod verify;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use mct_core::graph::io::{parse_colored, parse_graph};
use mct_core::graph::{named_pattern, EdgeColoredGraph, SimpleGraph};
use serde_json::Value;

use crate::catalog::{self, digest_file, ExperimentRecord};
use crate::output::{Format, Record};
use crate::{Cli, CliError, Command, Result};

/// What a command produced, before printing and cataloging.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub records: Vec<Record>,
    /// Replaces the per-record text lines in text format.
    pub table: Option<Vec<String>>,
    pub ok: bool,
    pub params: BTreeMap<String, Value>,
    pub inputs: Vec<PathBuf>,
    pub outputs: Vec<PathBuf>,
    pub values: BTreeMap<String, Value>,
}

impl Outcome {
    pub fn new() -> Self {
        Outcome {
            ok: true,
            ..Default::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.into(), value.into());
    }

    pub fn value(&mut self, key: &str, value: impl Into<Value>) {
        self.values.insert(key.into(), value.into());
    }
}

pub(crate) fn run(cli: &Cli) -> Result<bool> {
    let start = Instant::now();
    let (name, outcome) = match &cli.command {
        Command::Construct(args) => ("construct", construct::run(args)?),
        Command::Verify(args) => ("verify", verify::run(args, cli.seed)?),
        Command::Pack(args) => ("pack", pack::run(args)?),
        Command::Oracle(args) => ("oracle", oracle::run(args)?),
        Command::Report(args) => ("report", report::run(args)?),
    };
    let wall = start.elapsed();
    match (&outcome.table, cli.format) {
        (Some(lines), Format::Text) => lines.iter().for_each(|l| println!("{l}")),
        _ => outcome.records.iter().for_each(|r| println!("{}", r.render(cli.format))),
    }
    // the report only reads the catalog; its digest would cover wall times
    let reads_catalog = matches!(cli.command, Command::Report(_));
    if let (Some(path), false) = (&cli.catalog, reads_catalog) {
        let digests = |paths: &[PathBuf]| paths.iter().map(|p| digest_file(p)).collect::<Result<Vec<_>>>();
        let record = ExperimentRecord {
            command: name.to_string(),
            params: outcome.params.clone(),
            inputs: digests(&outcome.inputs)?,
            outputs: digests(&outcome.outputs)?,
            values: outcome.values.clone(),
            seed: cli.seed,
            wall_time_ms: wall.as_secs_f64() * 1000.0,
            version: env!("CARGO_PKG_VERSION").to_string(),
        };
        catalog::append(path, &record)?;
    }
    Ok(outcome.ok)
}

pub(crate) fn require<T: Copy>(value: Option<T>, flag: &str, what: &str) -> Result<T> {
    value.ok_or_else(|| CliError::Usage(format!("{what} needs {flag}")))
}

pub(crate) fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub(crate) fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".cert");
    PathBuf::from(s)
}

/// A pattern given by name, or else a graph file.
pub(crate) fn load_pattern(spec: &str) -> Result<SimpleGraph> {
    match named_pattern(spec) {
        Ok(g) => Ok(g),
        Err(err) => {
            let path = Path::new(spec);
            if path.is_file() {
                Ok(parse_graph(&read_text(path)?)?)
            } else {
                Err(CliError::Usage(format!("{err}; no such pattern file either")))
            }
        }
    }
}

/// Name used in catalog keys: upper-cased pattern name, or the file path.
pub(crate) fn pattern_key(spec: &str) -> String {
    if named_pattern(spec).is_ok() {
        spec.trim().to_ascii_uppercase()
    } else {
        spec.to_string()
    }
}

/// Whether the first edge line carries a color.
fn looks_colored(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .nth(1)
        .is_some_and(|l| l.split_whitespace().count() == 3)
}

/// Reads a plain or colored graph file.
pub(crate) fn read_host(path: &Path) -> Result<(SimpleGraph, Option<EdgeColoredGraph>)> {
    let text = read_text(path)?;
    if looks_colored(&text) {
        let h = parse_colored(&text)?;
        Ok((h.graph().clone(), Some(h)))
    } else {
        Ok((parse_graph(&text)?, None))
    }
}

pub(crate) fn read_colored(path: &Path) -> Result<EdgeColoredGraph> {
    Ok(parse_colored(&read_text(path)?)?)
}

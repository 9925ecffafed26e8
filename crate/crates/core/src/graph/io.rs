//! Plain-text formats.
//!
//! Graph file: first line `n m`, then `m` lines `u v`. The colored variant
//! appends the color to each edge line: `u v c`. Edges are written in
//! lexicographic order. Blank lines and lines starting with `#` are ignored
//! when reading.
//!
//! Certificate sidecar:
//!
//! ```text
//! pattern <k> <e>
//! <a> <b>                 (e pattern edges)
//! copies <t>
//! <color> <v_0> .. <v_k-1> (t lines, images of pattern vertices 0..k)
//! ```

use std::fmt::Write as _;

use super::{Color, EdgeColoredGraph, Embedding, Packing, SimpleGraph};
use crate::error::{Error, Result};

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.0, e.1);
    }
    out
}

pub fn write_colored(h: &EdgeColoredGraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.edge_count());
    for (e, c) in h.colored_edges() {
        let _ = writeln!(out, "{} {} {}", e.0, e.1, c);
    }
    out
}

/// Lines that carry data, with 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn num(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, found {tok:?}"),
    })
}

/// Edge lines as `(line number, values)`.
type Rows = Vec<(usize, Vec<usize>)>;

fn parse_edges(text: &str, width: usize) -> Result<(usize, Rows)> {
    let mut lines = data_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "empty input".into(),
    })?;
    if header.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            msg: "header must be `n m`".into(),
        });
    }
    let n = num(hline, header[0])?;
    let m = num(hline, header[1])?;
    let mut rows = Vec::with_capacity(m);
    for (line, toks) in lines {
        if toks.len() != width {
            return Err(Error::Parse {
                line,
                msg: format!("expected {width} fields, found {}", toks.len()),
            });
        }
        let vals = toks.iter().map(|t| num(line, t)).collect::<Result<Vec<_>>>()?;
        rows.push((line, vals));
    }
    if rows.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header announces {m} edges, found {}", rows.len()),
        });
    }
    Ok((n, rows))
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let (n, rows) = parse_edges(text, 2)?;
    let mut g = SimpleGraph::empty(n);
    for (line, r) in rows {
        let added = g.add_edge(r[0], r[1]).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
        if !added {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate edge {} {}", r[0], r[1]),
            });
        }
    }
    Ok(g)
}

pub fn parse_colored(text: &str) -> Result<EdgeColoredGraph> {
    let (n, rows) = parse_edges(text, 3)?;
    let mut triples = Vec::with_capacity(rows.len());
    let mut g = SimpleGraph::empty(n);
    for (line, r) in rows {
        let added = g.add_edge(r[0], r[1]).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
        if !added {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate edge {} {}", r[0], r[1]),
            });
        }
        triples.push((r[0], r[1], r[2] as Color));
    }
    EdgeColoredGraph::from_colored_edges(n, triples)
}

pub fn write_certificate(p: &Packing) -> String {
    let pattern = p.pattern();
    let mut out = format!("pattern {} {}\n", pattern.n(), pattern.edge_count());
    for e in pattern.edges() {
        let _ = writeln!(out, "{} {}", e.0, e.1);
    }
    let _ = writeln!(out, "copies {}", p.copies().len());
    for (c, emb) in p.colored_copies() {
        let _ = write!(out, "{c}");
        for v in &emb.images {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<Packing> {
    let mut lines = data_lines(text);
    let mut next = |what: &str| {
        lines.next().ok_or(Error::Parse {
            line: 0,
            msg: format!("unexpected end of input, expected {what}"),
        })
    };
    let (line, toks) = next("pattern header")?;
    if toks.len() != 3 || toks[0] != "pattern" {
        return Err(Error::Parse {
            line,
            msg: "expected `pattern <k> <e>`".into(),
        });
    }
    let k = num(line, toks[1])?;
    let e = num(line, toks[2])?;
    let mut pattern = SimpleGraph::empty(k);
    for _ in 0..e {
        let (line, toks) = next("pattern edge")?;
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: "expected `a b`".into(),
            });
        }
        pattern
            .add_edge(num(line, toks[0])?, num(line, toks[1])?)
            .map_err(|err| Error::Parse {
                line,
                msg: err.to_string(),
            })?;
    }
    let (line, toks) = next("copies header")?;
    if toks.len() != 2 || toks[0] != "copies" {
        return Err(Error::Parse {
            line,
            msg: "expected `copies <t>`".into(),
        });
    }
    let t = num(line, toks[1])?;
    let mut colors = Vec::with_capacity(t);
    let mut copies = Vec::with_capacity(t);
    for _ in 0..t {
        let (line, toks) = next("copy line")?;
        if toks.len() != k + 1 {
            return Err(Error::Parse {
                line,
                msg: format!("expected color and {k} images"),
            });
        }
        let vals = toks.iter().map(|t| num(line, t)).collect::<Result<Vec<_>>>()?;
        colors.push(vals[0]);
        copies.push(Embedding::new(vals[1..].to_vec()));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            msg: "trailing data after the last copy".into(),
        });
    }
    Packing::with_colors(pattern, copies, colors)
}

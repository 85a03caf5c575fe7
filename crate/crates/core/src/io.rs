//! Graph files.
//!
//! Text format: a header `p <n> <m>` followed by `m` lines `e <u> <v>` with
//! 0-based endpoints. Blank lines and lines starting with `c` or `#` are
//! ignored.
//!
//! JSON format: `{"n": 4, "edges": [[0,1],[1,2]]}`, optionally carrying
//! `root`, `ham_path` and `intervals` for chain graphs.

use serde::{Deserialize, Serialize};

use crate::constructions::{ChainArtifact, IntervalRepresentation};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex};

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    match tok {
        Some(t) => t
            .parse()
            .or_else(|_| parse_err(line, format!("bad {what} {t:?}"))),
        None => parse_err(line, format!("missing {what}")),
    }
}

pub fn parse_text(src: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last = 0;
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        last = line;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('c') || text.starts_with('#') {
            continue;
        }
        let mut toks = text.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return parse_err(line, "second header line");
                }
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return parse_err(line, "edge before header");
                };
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                if u == v {
                    return parse_err(line, format!("loop edge ({u},{v})"));
                }
                if u >= n || v >= n {
                    return parse_err(line, format!("edge ({u},{v}) out of range for n = {n}"));
                }
                edges.push((u, v));
            }
            Some(other) => return parse_err(line, format!("unknown line type {other:?}")),
            None => unreachable!("blank lines skipped"),
        }
        if toks.next().is_some() {
            return parse_err(line, "trailing tokens");
        }
    }
    let Some((n, m)) = header else {
        return parse_err(last.max(1), "missing header `p <n> <m>`");
    };
    if edges.len() != m {
        return parse_err(
            last.max(1),
            format!("header promises {m} edges, found {}", edges.len()),
        );
    }
    Graph::new(n, edges)
}

pub fn to_text(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ham_path: Option<Path>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intervals: Option<IntervalRepresentation>,
}

impl GraphFile {
    pub fn graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied())
    }
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().collect(),
            ..Default::default()
        }
    }
}

impl From<&ChainArtifact> for GraphFile {
    fn from(a: &ChainArtifact) -> Self {
        GraphFile {
            root: Some(a.root),
            ham_path: Some(a.ham_path.clone()),
            intervals: Some(a.intervals.clone()),
            ..GraphFile::from(&a.graph)
        }
    }
}

pub fn parse_json(src: &str) -> Result<GraphFile> {
    serde_json::from_str(src).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })
}

pub fn to_json(file: &GraphFile) -> String {
    serde_json::to_string(file).expect("graph files serialize")
}

/// Reads either format, choosing JSON when the first non-blank character is
/// `{`.
pub fn parse_any(src: &str) -> Result<GraphFile> {
    if src.trim_start().starts_with('{') {
        let file = parse_json(src)?;
        file.graph()?;
        Ok(file)
    } else {
        Ok(GraphFile::from(&parse_text(src)?))
    }
}

//! Text formats: edge-list files and labeling strings.
//!
//! Edge lists start with a header line `n m` followed by `m` lines `u v`
//! (1-based). Blank lines and `#` comments are ignored.
//!
//! Labelings are comma-separated values, optionally prefixed with the
//! modulus: `1,3,2` or `p=2:1,2,2,1`.

use std::fmt::Write as _;
use std::str::FromStr;

use magicdist_core::construct::{construct, Family};
use magicdist_core::graph6::{parse_graph6, to_graph6, Graph6Error};
use magicdist_core::labeling::{Labeling, LabelingError, ModularLabeling};
use magicdist_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("edge list declares {declared} edges but has {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("bad labeling `{text}`: {message}")]
    LabelSyntax { text: String, message: String },
    #[error("labeling carries modulus {labeled} but --mod is {flag}")]
    ModulusConflict { labeled: usize, flag: usize },
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), InputError> {
    let bad = |message: &str| InputError::EdgeList {
        line: line_no,
        message: message.to_owned(),
    };
    let mut parts = line.split_whitespace();
    let a = parts.next().ok_or_else(|| bad("expected two integers"))?;
    let b = parts.next().ok_or_else(|| bad("expected two integers"))?;
    if parts.next().is_some() {
        return Err(bad("trailing tokens"));
    }
    let a = a.parse().map_err(|_| bad("not a non-negative integer"))?;
    let b = b.parse().map_err(|_| bad("not a non-negative integer"))?;
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(InputError::EdgeList {
        line: 1,
        message: "missing `n m` header".to_owned(),
    })?;
    let (n, m) = parse_pair(line_no, header)?;
    let edges = lines
        .map(|(no, line)| parse_pair(no, line))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(InputError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// A labeling as typed on the command line, before it is checked against a
/// graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSpec {
    pub modulus: Option<usize>,
    pub values: Vec<usize>,
}

impl FromStr for LabelSpec {
    type Err = InputError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = |message: &str| InputError::LabelSyntax {
            text: text.to_owned(),
            message: message.to_owned(),
        };
        let trimmed = text.trim();
        let (modulus, body) = match trimmed.split_once(':') {
            Some((head, body)) => {
                let p = head
                    .trim()
                    .strip_prefix("p=")
                    .ok_or_else(|| bad("prefix must look like `p=<modulus>:`"))?;
                let p = p
                    .trim()
                    .parse()
                    .map_err(|_| bad("modulus is not an integer"))?;
                (Some(p), body)
            }
            None => (None, trimmed),
        };
        let values = body
            .split(',')
            .map(|v| v.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad("values must be positive integers"))?;
        Ok(LabelSpec { modulus, values })
    }
}

/// Either kind of labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyLabeling {
    Exact(Labeling),
    Modular(ModularLabeling),
}

impl LabelSpec {
    /// Resolves against an optional `--mod` flag. A modulus on either side
    /// makes the labeling modular; if both are given they must agree.
    pub fn resolve(self, flag: Option<usize>) -> Result<AnyLabeling, InputError> {
        let modulus = match (self.modulus, flag) {
            (Some(a), Some(b)) if a != b => {
                return Err(InputError::ModulusConflict {
                    labeled: a,
                    flag: b,
                })
            }
            (a, b) => a.or(b),
        };
        Ok(match modulus {
            Some(p) => AnyLabeling::Modular(ModularLabeling::new(p, self.values)?),
            None => AnyLabeling::Exact(Labeling::new(self.values)?),
        })
    }

    pub fn into_modular(self) -> Result<ModularLabeling, InputError> {
        match self.resolve(None)? {
            AnyLabeling::Modular(f) => Ok(f),
            AnyLabeling::Exact(f) => Err(InputError::LabelSyntax {
                text: format!("{:?}", f.values()),
                message: "a modulus prefix `p=<modulus>:` is required".to_owned(),
            }),
        }
    }
}

/// Where a graph comes from on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    Graph6(String),
    EdgeFile(String),
    Family(String),
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph, InputError> {
        match self {
            GraphSource::Graph6(s) => Ok(parse_graph6(s)?),
            GraphSource::EdgeFile(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
                    path: path.clone(),
                    source,
                })?;
                parse_edge_list(&text)
            }
            GraphSource::Family(spec) => Ok(construct(&spec.parse::<Family>()?)?),
        }
    }
}

/// Stable text used to fingerprint a graph input: its graph6 encoding in the
/// given vertex order.
pub fn graph_fingerprint(g: &Graph) -> String {
    to_graph6(g)
}

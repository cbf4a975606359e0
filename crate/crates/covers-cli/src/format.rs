//! The instance file format and its relatives.
//!
//! An instance document is line-oriented text: one `r` line, one `vertex`
//! line per vertex, one `edge` line per edge record. `#` starts a comment,
//! blank lines are ignored, and permutations are 1-indexed one-line image
//! sequences:
//!
//! ```text
//! r 3
//! vertex a
//! vertex b
//! vertex c
//! edge a b [1,2,3]
//! edge b c [2,1,3]
//! edge c a [2,3,1]
//! ```
//!
//! `edge x x [...]` encodes a loop. Canonical form sorts the vertex lines and
//! keeps edges in declaration (edge id) order; parsing a document's canonical
//! form reproduces the document exactly.
//!
//! Plain multigraphs (for `check-cover`) use the same grammar without `r` and
//! without permutations; vertex maps are bare `<cover-label> <base-label>`
//! pairs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use covers::cover::{CoverError, CoverInstance};
use covers::multigraph::{Multigraph, VertexId};
use covers::perm::{Perm, PermError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected `{expected}`, got `{got}`")]
    Malformed {
        line: usize,
        expected: &'static str,
        got: String,
    },
    #[error("line {line}: unknown directive `{word}`")]
    UnknownDirective { line: usize, word: String },
    #[error("line {line}: duplicate label `{label}`")]
    DuplicateLabel { line: usize, label: String },
    #[error("line {line}: invalid label `{label}` (no whitespace, `#` or `[`, nonempty)")]
    BadLabel { line: usize, label: String },
    #[error("line {line}: unknown endpoint `{label}`")]
    UnknownEndpoint { line: usize, label: String },
    #[error("line {line}: `r` was already declared")]
    DuplicateR { line: usize },
    #[error("line {line}: `r` must be a positive integer")]
    BadR { line: usize },
    #[error("line {line}: edges need `r` declared first")]
    EdgeBeforeR { line: usize },
    #[error("line {line}: permutation has {got} images, expected {expected}")]
    WrongPermLength {
        line: usize,
        got: usize,
        expected: usize,
    },
    #[error("line {line}: permutation is not a bijection ({source})")]
    NotBijection { line: usize, source: PermError },
    #[error("line {line}: malformed permutation `{text}` (want e.g. [2,1,3])")]
    BadPerm { line: usize, text: String },
    #[error("document never declares `r`")]
    MissingR,
    #[error("invalid instance: {0}")]
    Cover(#[from] CoverError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDecl {
    pub tail: String,
    pub head: String,
    pub perm: Perm,
}

/// Parsed instance document in canonical order: vertices sorted, edges as
/// declared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDocument {
    pub r: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDecl>,
}

fn valid_label(label: &str) -> bool {
    !label.is_empty() && !label.contains(['#', '[']) && !label.chars().any(char::is_whitespace)
}

/// Strips the comment tail and splits a line into meaningful tokens.
fn tokens(raw: &str) -> Vec<&str> {
    let code = raw.split('#').next().unwrap_or("");
    code.split_whitespace().collect()
}

fn parse_perm_text(text: &str, r: u32, line: usize) -> Result<Perm, ParseError> {
    let bad = || ParseError::BadPerm {
        line,
        text: text.to_string(),
    };
    let inner = text
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(bad)?;
    let mut images = Vec::new();
    if !inner.is_empty() {
        for part in inner.split(',') {
            images.push(part.trim().parse::<u32>().map_err(|_| bad())?);
        }
    }
    if images.len() != r as usize {
        return Err(ParseError::WrongPermLength {
            line,
            got: images.len(),
            expected: r as usize,
        });
    }
    Perm::from_images(images).map_err(|source| ParseError::NotBijection { line, source })
}

impl InstanceDocument {
    pub fn parse(text: &str) -> Result<InstanceDocument, ParseError> {
        let mut r: Option<u32> = None;
        let mut vertices: Vec<String> = Vec::new();
        let mut edges: Vec<EdgeDecl> = Vec::new();

        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let toks = tokens(raw);
            if toks.is_empty() {
                continue;
            }
            match toks[0] {
                "r" => {
                    if r.is_some() {
                        return Err(ParseError::DuplicateR { line });
                    }
                    if toks.len() != 2 {
                        return Err(ParseError::Malformed {
                            line,
                            expected: "r <positive integer>",
                            got: raw.trim().to_string(),
                        });
                    }
                    match toks[1].parse::<u32>() {
                        Ok(value) if value >= 1 => r = Some(value),
                        _ => return Err(ParseError::BadR { line }),
                    }
                }
                "vertex" => {
                    if toks.len() != 2 {
                        return Err(ParseError::Malformed {
                            line,
                            expected: "vertex <label>",
                            got: raw.trim().to_string(),
                        });
                    }
                    let label = toks[1];
                    if !valid_label(label) {
                        return Err(ParseError::BadLabel {
                            line,
                            label: label.to_string(),
                        });
                    }
                    if vertices.iter().any(|v| v == label) {
                        return Err(ParseError::DuplicateLabel {
                            line,
                            label: label.to_string(),
                        });
                    }
                    vertices.push(label.to_string());
                }
                "edge" => {
                    let r = r.ok_or(ParseError::EdgeBeforeR { line })?;
                    if toks.len() < 4 {
                        return Err(ParseError::Malformed {
                            line,
                            expected: "edge <tail> <head> [images]",
                            got: raw.trim().to_string(),
                        });
                    }
                    for label in [toks[1], toks[2]] {
                        if !vertices.iter().any(|v| v == label) {
                            return Err(ParseError::UnknownEndpoint {
                                line,
                                label: label.to_string(),
                            });
                        }
                    }
                    // images may contain spaces after commas; rejoin the tail
                    let perm_text: String = toks[3..].concat();
                    let perm = parse_perm_text(&perm_text, r, line)?;
                    edges.push(EdgeDecl {
                        tail: toks[1].to_string(),
                        head: toks[2].to_string(),
                        perm,
                    });
                }
                other => {
                    return Err(ParseError::UnknownDirective {
                        line,
                        word: other.to_string(),
                    })
                }
            }
        }

        let r = r.ok_or(ParseError::MissingR)?;
        vertices.sort();
        Ok(InstanceDocument { r, vertices, edges })
    }

    /// Canonical text: `r` first, sorted vertices, edges in declaration order.
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        writeln!(out, "r {}", self.r).unwrap();
        for v in &self.vertices {
            writeln!(out, "vertex {v}").unwrap();
        }
        for e in &self.edges {
            writeln!(out, "edge {} {} {}", e.tail, e.head, e.perm).unwrap();
        }
        out
    }

    /// Builds the dense-index instance. Vertex ids follow the sorted label
    /// order; edge ids follow declaration order.
    pub fn to_cover(&self) -> Result<(CoverInstance, Vec<String>), ParseError> {
        let index: BTreeMap<&str, VertexId> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, label)| (label.as_str(), VertexId(k as u32)))
            .collect();
        let mut base = Multigraph::with_vertices(self.vertices.len() as u32);
        let mut alpha = BTreeMap::new();
        for decl in &self.edges {
            let e = base
                .add_edge(index[decl.tail.as_str()], index[decl.head.as_str()])
                .expect("endpoints validated at parse time");
            alpha.insert(e, decl.perm.clone());
        }
        let cover = CoverInstance::new(base, self.r, alpha)?;
        Ok((cover, self.vertices.clone()))
    }

    /// Document for an instance whose vertices are labelled by `labels` in
    /// base-vertex order.
    pub fn from_cover(c: &CoverInstance, labels: &[String]) -> InstanceDocument {
        assert_eq!(labels.len(), c.base().vertex_count());
        let index: BTreeMap<VertexId, &String> = c
            .base()
            .vertices()
            .iter()
            .copied()
            .zip(labels.iter())
            .collect();
        let mut vertices: Vec<String> = labels.to_vec();
        vertices.sort();
        let edges = c
            .base()
            .edges()
            .iter()
            .map(|rec| EdgeDecl {
                tail: index[&rec.tail].clone(),
                head: index[&rec.head].clone(),
                perm: c.perm(rec.id).expect("instance is total").clone(),
            })
            .collect();
        InstanceDocument {
            r: c.r(),
            vertices,
            edges,
        }
    }
}

/// A bare multigraph document: `vertex` and `edge` lines, no permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<GraphDocument, ParseError> {
        let mut vertices: Vec<String> = Vec::new();
        let mut edges = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let toks = tokens(raw);
            if toks.is_empty() {
                continue;
            }
            match toks[0] {
                "vertex" => {
                    if toks.len() != 2 {
                        return Err(ParseError::Malformed {
                            line,
                            expected: "vertex <label>",
                            got: raw.trim().to_string(),
                        });
                    }
                    let label = toks[1];
                    if !valid_label(label) {
                        return Err(ParseError::BadLabel {
                            line,
                            label: label.to_string(),
                        });
                    }
                    if vertices.iter().any(|v| v == label) {
                        return Err(ParseError::DuplicateLabel {
                            line,
                            label: label.to_string(),
                        });
                    }
                    vertices.push(label.to_string());
                }
                "edge" => {
                    if toks.len() != 3 {
                        return Err(ParseError::Malformed {
                            line,
                            expected: "edge <tail> <head>",
                            got: raw.trim().to_string(),
                        });
                    }
                    for label in [toks[1], toks[2]] {
                        if !vertices.iter().any(|v| v == label) {
                            return Err(ParseError::UnknownEndpoint {
                                line,
                                label: label.to_string(),
                            });
                        }
                    }
                    edges.push((toks[1].to_string(), toks[2].to_string()));
                }
                other => {
                    return Err(ParseError::UnknownDirective {
                        line,
                        word: other.to_string(),
                    })
                }
            }
        }
        vertices.sort();
        Ok(GraphDocument { vertices, edges })
    }

    pub fn to_multigraph(&self) -> (Multigraph, Vec<String>) {
        let index: BTreeMap<&str, VertexId> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, label)| (label.as_str(), VertexId(k as u32)))
            .collect();
        let mut g = Multigraph::with_vertices(self.vertices.len() as u32);
        for (tail, head) in &self.edges {
            g.add_edge(index[tail.as_str()], index[head.as_str()])
                .expect("endpoints validated at parse time");
        }
        (g, self.vertices.clone())
    }
}

/// `<cover-label> <base-label>` pairs, one per line.
pub fn parse_vertex_map(text: &str) -> Result<Vec<(String, String)>, ParseError> {
    let mut pairs = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let toks = tokens(raw);
        if toks.is_empty() {
            continue;
        }
        if toks.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                expected: "<cover-label> <base-label>",
                got: raw.trim().to_string(),
            });
        }
        pairs.push((toks[0].to_string(), toks[1].to_string()));
    }
    Ok(pairs)
}

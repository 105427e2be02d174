//! Text formats for ideals and graphs.
//!
//! Ideal files: a header line `n <ambient>`, then one generator per line as
//! space-separated 1-based variable indices. Graph files: a header line
//! `n <count>`, then one `u v` pair per line. `#` starts a comment in both.
//! Output is canonical: generators sorted by degree then lexicographically.

use thiserror::Error;

use crate::graph::{FamilySpec, Graph, GraphError};
use crate::ideal::{IdealError, SqfIdeal, SqfMonomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: repeated index {index} (exponents above 1 are not accepted here)")]
    RepeatedIndex { line: usize, index: usize },
    #[error(transparent)]
    Ideal(IdealError),
    #[error(transparent)]
    Graph(GraphError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_header(line_no: usize, line: &str) -> Result<usize, ParseError> {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some("n"), Some(value), None) => value.parse().map_err(|_| ParseError::Syntax {
            line: line_no,
            message: format!("bad count `{value}`"),
        }),
        _ => Err(ParseError::Syntax {
            line: line_no,
            message: format!("expected header `n <count>`, got `{line}`"),
        }),
    }
}

fn parse_indices(line_no: usize, line: &str) -> Result<Vec<usize>, ParseError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| ParseError::Syntax {
                line: line_no,
                message: format!("bad index `{tok}`"),
            })
        })
        .collect()
}

pub fn parse_ideal(text: &str) -> Result<SqfIdeal, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(ParseError::Syntax {
        line: 0,
        message: "empty input".into(),
    })?;
    let ambient = parse_header(line_no, header)?;
    let mut gens = Vec::new();
    for (line_no, line) in lines {
        let indices = parse_indices(line_no, line)?;
        let mut seen = std::collections::BTreeSet::new();
        for &i in &indices {
            if !seen.insert(i) {
                return Err(ParseError::RepeatedIndex { line: line_no, index: i });
            }
            if i == 0 || i > ambient {
                return Err(ParseError::Ideal(IdealError::AmbientMismatch {
                    index: i,
                    ambient,
                }));
            }
        }
        gens.push(SqfMonomial::from_vars(indices));
    }
    SqfIdeal::minimalize(ambient, gens).map_err(ParseError::Ideal)
}

pub fn format_ideal(ideal: &SqfIdeal) -> String {
    let mut out = format!("n {}\n", ideal.ambient());
    for g in ideal.gens() {
        let indices: Vec<String> = g.support().iter().map(|i| i.to_string()).collect();
        out.push_str(&indices.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(ParseError::Syntax {
        line: 0,
        message: "empty input".into(),
    })?;
    let n = parse_header(line_no, header)?;
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let indices = parse_indices(line_no, line)?;
        if indices.len() != 2 {
            return Err(ParseError::Syntax {
                line: line_no,
                message: format!("expected an edge `u v`, got {} indices", indices.len()),
            });
        }
        edges.push((indices[0], indices[1]));
    }
    Graph::new(n, edges).map_err(ParseError::Graph)
}

pub fn format_graph(graph: &Graph) -> String {
    let mut out = format!("n {}\n", graph.n());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Inputs accepted on the command line: a family shorthand (`name:args`) or
/// a file path.
pub enum GraphInput {
    Family(FamilySpec),
    File(String),
}

pub fn classify_graph_input(arg: &str) -> GraphInput {
    if arg.contains(':') && !std::path::Path::new(arg).exists() {
        if let Ok(spec) = arg.parse::<FamilySpec>() {
            return GraphInput::Family(spec);
        }
    }
    GraphInput::File(arg.to_string())
}

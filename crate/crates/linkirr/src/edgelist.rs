//! Whitespace/comma-tolerant edge-list documents.
//!
//! The format exists to ingest published edge sets verbatim: pairs may be
//! wrapped in parentheses or braces, separated by commas or whitespace,
//! split across lines, and repeated (duplicates collapse on build). `#`
//! starts a comment; an optional `n=<count>` line pins the order explicitly.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("negative vertex index `{0}`")]
    NegativeIndex(String),
    #[error("vertex index {index} is below the document base {base}")]
    IndexBelowBase { index: usize, base: usize },
    #[error("unpaired trailing vertex index {0}")]
    DanglingIndex(usize),
    #[error("unexpected token `{0}`")]
    BadToken(String),
    #[error("indexing base must be 0 or 1, got {0}")]
    BadBase(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed edge-list document, before graph construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListDoc {
    /// Vertex indexing base of the source text: 0 or 1.
    pub base: usize,
    /// Pairs exactly as listed (shifted to base 0), duplicates preserved.
    pub pairs: Vec<(usize, usize)>,
    /// Order pinned by an `n=` directive, if present (already base-free).
    pub n_hint: Option<usize>,
}

impl EdgeListDoc {
    /// Parses the document text under the given indexing base.
    pub fn parse(text: &str, base: usize) -> Result<EdgeListDoc, EdgeListError> {
        if base > 1 {
            return Err(EdgeListError::BadBase(base));
        }
        let mut pairs = Vec::new();
        let mut n_hint = None;
        let mut pending: Option<usize> = None;
        for raw_line in text.lines() {
            let line = raw_line.split('#').next().unwrap_or("");
            let compact: String = line.split_whitespace().collect::<Vec<_>>().join(" ");
            if let Some(rest) = compact.strip_prefix("n=").or_else(|| {
                compact.strip_prefix("n =").map(str::trim_start)
            }) {
                n_hint = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| EdgeListError::BadToken(compact.clone()))?,
                );
                continue;
            }
            for token in line.split(|c: char| c.is_whitespace() || ",(){}[]".contains(c)) {
                if token.is_empty() {
                    continue;
                }
                if token.starts_with('-') {
                    return Err(EdgeListError::NegativeIndex(token.to_string()));
                }
                let index: usize = token
                    .parse()
                    .map_err(|_| EdgeListError::BadToken(token.to_string()))?;
                if index < base {
                    return Err(EdgeListError::IndexBelowBase { index, base });
                }
                let index = index - base;
                match pending.take() {
                    None => pending = Some(index),
                    Some(first) => pairs.push((first, index)),
                }
            }
        }
        if let Some(v) = pending {
            return Err(EdgeListError::DanglingIndex(v + base));
        }
        Ok(EdgeListDoc { base, pairs, n_hint })
    }

    /// Order of the resulting graph: the hint when present, otherwise one
    /// past the largest (rebased) index.
    pub fn order(&self) -> usize {
        self.n_hint.unwrap_or_else(|| {
            self.pairs
                .iter()
                .map(|&(u, v)| u.max(v) + 1)
                .max()
                .unwrap_or(0)
        })
    }

    /// Builds the graph; duplicate and reversed pairs collapse.
    pub fn build(&self) -> Result<Graph, EdgeListError> {
        Ok(Graph::build(self.order(), &self.pairs)?)
    }
}

/// Parses and builds in one step.
pub fn parse_edge_list(text: &str, base: usize) -> Result<Graph, EdgeListError> {
    EdgeListDoc::parse(text, base)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerant_syntax() {
        let g = parse_edge_list("{(0, 1), (1, 2)\n (2,0)} # triangle", 0).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn one_based_and_hint() {
        let g = parse_edge_list("n=5\n1 2, 2 3", 1).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_edge_list("(1,2) (2,1) (1,2)", 1).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_edge_list("0 -1", 0),
            Err(EdgeListError::NegativeIndex("-1".into()))
        );
        assert_eq!(
            parse_edge_list("0 1", 1),
            Err(EdgeListError::IndexBelowBase { index: 0, base: 1 })
        );
        assert_eq!(parse_edge_list("0 1 2", 0), Err(EdgeListError::DanglingIndex(2)));
        assert_eq!(
            parse_edge_list("0 x", 0),
            Err(EdgeListError::BadToken("x".into()))
        );
        assert!(matches!(
            parse_edge_list("3 3", 0),
            Err(EdgeListError::Graph(GraphError::SelfLoop(3)))
        ));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# header\n\n0 1 # tail\n", 0).unwrap();
        assert_eq!(g.edge_count(), 1);
    }
}

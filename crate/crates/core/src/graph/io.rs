//! Canonical Graph JSON and whitespace edge-list text.
//!
//! JSON form: `{"vertices":[...],"edges":[["a","b"],...]}` with vertices
//! sorted, each edge sorted, and edges sorted lexicographically. Writing is
//! compact with a trailing newline, so the encoding is byte-for-byte stable.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
pub(crate) struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g.edge_labels().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(doc: GraphJson) -> Result<Graph> {
        Graph::build(doc.vertices, doc.edges)
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("graph JSON serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        Ok(serde_json::from_str(text)?)
    }

    /// Parses `u v` lines; a line with one token declares an isolated vertex.
    /// Blank lines and `#` comments are ignored.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut labels = std::collections::BTreeSet::new();
        let mut edges = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                [v] => {
                    labels.insert(v.to_string());
                }
                [u, v] => {
                    labels.insert(u.to_string());
                    labels.insert(v.to_string());
                    edges.push((u.to_string(), v.to_string()));
                }
                _ => {
                    return Err(Error::Parse {
                        line: no + 1,
                        message: format!("expected `u v` or `v`, got {} tokens", tokens.len()),
                    })
                }
            }
        }
        Graph::build(labels, edges)
    }

    /// Edge-list text: one line per edge, then one per isolated vertex.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edge_labels() {
            out.push_str(&format!("{a} {b}\n"));
        }
        for v in (0..self.len()).filter(|&v| self.degree(v) == 0) {
            out.push_str(self.label(v));
            out.push('\n');
        }
        out
    }

    /// JSON if the first non-blank character is `{`, edge list otherwise.
    pub fn parse(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            Graph::from_json(text)
        } else {
            Graph::from_edge_list(text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn canonical_json_is_bit_exact() {
        let g = Graph::build(["c", "a", "b"], [("b", "a"), ("c", "a")]).unwrap();
        assert_eq!(
            g.to_json(),
            "{\"vertices\":[\"a\",\"b\",\"c\"],\"edges\":[[\"a\",\"b\"],[\"a\",\"c\"]]}\n"
        );
    }

    #[test]
    fn edge_list_with_isolated_vertex() {
        let g = Graph::parse("a b\n# comment\nb c\n\nd\n").unwrap();
        assert_eq!(g.labels(), ["a", "b", "c", "d"]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(Graph::parse(&g.to_edge_list()).unwrap(), g);
        assert!(matches!(Graph::parse("a b c\n"), Err(Error::Parse { line: 1, .. })));
        assert!(Graph::parse("{\"vertices\":[\"a\"],\"edges\":[[\"a\",\"b\"]]}").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = octahedron();
        assert_eq!(Graph::parse(&g.to_json()).unwrap(), g);
    }
}

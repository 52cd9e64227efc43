//! Named small graphs used as building blocks and fixtures.

use super::Graph;
use crate::error::{Error, Result};

/// `a, b, c, ...` for up to 26 vertices, otherwise zero-padded `v00, v01, ...`.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| char::from(b'a' + i as u8).to_string()).collect()
    } else {
        let width = (n - 1).to_string().len();
        (0..n).map(|i| format!("v{i:0width$}")).collect()
    }
}

/// The cycle `C_n` on `default_labels(n)`, in label order around the cycle.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    Ok(Graph::from_indexed(default_labels(n), (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::from_indexed(default_labels(n), edges.collect::<Vec<_>>())
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::from_indexed(default_labels(n), (1..n).map(|i| (i - 1, i)))
}

/// `n` isolated vertices.
pub fn independent(n: usize) -> Graph {
    Graph::from_indexed(default_labels(n), std::iter::empty())
}

/// Two isolated vertices: the 0-sphere.
pub fn two_points() -> Graph {
    independent(2)
}

/// Wheel `W_n`: hub `hub` joined to a rim `C_n`.
pub fn wheel(n: usize) -> Result<Graph> {
    let rim = cycle(n)?;
    let mut labels = rim.labels().to_vec();
    labels.push("hub".into());
    let edges: Vec<_> = rim.edges().chain((0..n).map(|i| (i, n))).collect();
    Ok(Graph::from_indexed(labels, edges))
}

/// Octahedron `K_{2,2,2}` with antipodal pairs `{a,d}`, `{b,e}`, `{c,f}`.
pub fn octahedron() -> Graph {
    let edges = (0..6).flat_map(|i| (i + 1..6).filter(move |&j| j != i + 3).map(move |j| (i, j)));
    Graph::from_indexed(default_labels(6), edges.collect::<Vec<_>>())
}

/// The `q`-dimensional hypercube on bit-string labels.
pub fn hypercube(q: usize) -> Graph {
    let n = 1usize << q;
    let labels = (0..n).map(|i| format!("{i:0q$b}")).collect();
    let edges = (0..n).flat_map(|i| (0..q).map(move |b| (i, i ^ (1 << b))).filter(|&(i, j)| i < j));
    Graph::from_indexed(labels, edges.collect::<Vec<_>>())
}

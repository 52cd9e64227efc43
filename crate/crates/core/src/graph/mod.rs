//! Finite simple graphs with stable, canonically ordered labels.
//!
//! Vertices are stored sorted by label, so vertex index order and label
//! order coincide. Everything downstream (links, cliques, facets) works on
//! indices internally and converts to labels only at the API boundary.

pub mod cliques;
pub mod families;
pub mod io;
mod iso;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of vertex indices into one particular [`Graph`].
pub type VertexSet = FixedBitSet;

/// Immutable finite simple undirected graph.
///
/// Equality is canonical: two graphs are equal iff they have the same labels
/// and the same edges.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "io::GraphJson", try_from = "io::GraphJson")]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &self.edge_labels().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The graph with no vertices.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a graph from declared labels and edge pairs.
    ///
    /// Duplicate edges (in either orientation) collapse to one edge.
    pub fn build<L, A, B>(labels: impl IntoIterator<Item = L>, edges: impl IntoIterator<Item = (A, B)>) -> Result<Self>
    where
        L: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut sorted: Vec<String> = labels.into_iter().map(Into::into).collect();
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateLabel(pair[0].clone()));
            }
        }
        let n = sorted.len();
        let mut adj = vec![VertexSet::with_capacity(n); n];
        let find = |l: &str| {
            sorted
                .binary_search_by(|x| x.as_str().cmp(l))
                .map_err(|_| Error::UnknownVertex(l.to_string()))
        };
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = find(a)?;
            let j = find(b)?;
            if i == j {
                return Err(Error::SelfLoop(a.to_string()));
            }
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(Self { labels: sorted, adj })
    }

    /// Builds a graph from labels in arbitrary order and edges given as
    /// indices into that list. Labels must be distinct.
    pub(crate) fn from_indexed(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = labels.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut position = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut adj = vec![VertexSet::with_capacity(n); n];
        for (a, b) in edges {
            debug_assert_ne!(a, b);
            let (i, j) = (position[a], position[b]);
            adj[i].insert(j);
            adj[j].insert(i);
        }
        let mut labels = labels;
        let sorted = order
            .iter()
            .map(|&old| std::mem::take(&mut labels[old]))
            .collect::<Vec<_>>();
        debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]), "labels must be distinct");
        Self { labels: sorted, adj }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|x| x.as_str().cmp(label)).ok()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index_of(label).is_some()
    }

    fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.ones().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges().map(|(i, j)| (self.label(i), self.label(j)))
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        let mut all = VertexSet::with_capacity(self.len());
        all.insert_range(..);
        all
    }

    /// Converts a list of labels to a vertex set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        let mut set = VertexSet::with_capacity(self.len());
        for l in labels {
            set.insert(self.require(l.as_ref())?);
        }
        Ok(set)
    }

    pub fn labels_of(&self, set: &VertexSet) -> Vec<String> {
        set.ones().map(|i| self.labels[i].clone()).collect()
    }

    /// Induced subgraph on an index set.
    pub fn induced(&self, set: &VertexSet) -> Graph {
        let keep: Vec<usize> = set.ones().collect();
        let n = keep.len();
        let mut adj = vec![VertexSet::with_capacity(n); n];
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.adj[u].contains(v) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
        }
        Graph {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            adj,
        }
    }

    /// Induced subgraph on a set of labels.
    pub fn induced_subgraph<S: AsRef<str>>(&self, labels: &[S]) -> Result<Graph> {
        Ok(self.induced(&self.set_of(labels)?))
    }

    /// The unit link of `v`: the subgraph induced by its neighbors.
    pub fn unit_link(&self, v: &str) -> Result<Graph> {
        let i = self.require(v)?;
        Ok(self.induced(&self.adj[i]))
    }

    /// True iff all vertices of `set` are pairwise adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(a, &u)| set[a + 1..].iter().all(|&v| self.adj[u].contains(v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.len();
        self.adj.iter().all(|row| row.count_ones(..) + 1 == n)
    }

    /// Connected components, each as a vertex set, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.len();
        let mut seen = VertexSet::with_capacity(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::with_capacity(n);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for w in self.adj[u].ones() {
                    if !seen.put(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Inclusion-maximal cliques, as simplices in canonical order.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        cliques::maximal_cliques(self)
            .into_iter()
            .map(|c| self.simplex(&c))
            .collect()
    }

    /// Clique number minus one; `-1` for the empty graph.
    pub fn dimension(&self) -> i32 {
        cliques::clique_number(self) as i32 - 1
    }

    /// `Some(n)` iff the graph is exactly one cycle `C_n` (connected and
    /// 2-regular, so `n >= 3`).
    pub fn cycle_length(&self) -> Option<usize> {
        let n = self.len();
        if n < 3 || !(0..n).all(|v| self.degree(v) == 2) || !self.is_connected() {
            return None;
        }
        Some(n)
    }

    /// Whether an adjacency-preserving label bijection exists.
    ///
    /// Uses color refinement to prune, then backtracking. Intended for graphs
    /// up to a few dozen vertices; highly symmetric inputs beyond that may be
    /// slow.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        iso::is_isomorphic(self, other)
    }

    /// Relabels every vertex with `f`. The new labels must stay distinct.
    pub fn map_labels(&self, f: impl Fn(&str) -> String) -> Graph {
        let labels = self.labels.iter().map(|l| f(l)).collect();
        Graph::from_indexed(labels, self.edges().collect::<Vec<_>>())
    }

    /// The simplex on a list of vertex indices.
    pub fn simplex(&self, vertices: &[usize]) -> Simplex {
        let mut idx = vertices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        debug_assert!(self.is_clique(&idx));
        Simplex {
            vertices: idx.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    /// Union of two graphs on the same label universe: vertex and edge sets
    /// are unioned.
    pub fn union(&self, other: &Graph) -> Graph {
        let labels: BTreeSet<&str> = self.labels.iter().chain(&other.labels).map(String::as_str).collect();
        let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let edges: Vec<(usize, usize)> = self
            .edge_labels()
            .chain(other.edge_labels())
            .map(|(a, b)| (index[a], index[b]))
            .collect();
        Graph::from_indexed(labels.into_iter().map(String::from).collect(), edges)
    }

    /// True iff `V(self) ⊆ V(other)` and `E(self) ⊆ E(other)`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        let map: Option<Vec<usize>> = self.labels.iter().map(|l| other.index_of(l)).collect();
        match map {
            None => false,
            Some(map) => self.edges().all(|(i, j)| other.is_adjacent(map[i], map[j])),
        }
    }
}

/// A complete subgraph, given by its sorted vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex {
    vertices: Vec<String>,
}

impl Simplex {
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dimension(&self) -> i32 {
        self.vertices.len() as i32 - 1
    }

    /// Canonical string form `v1-v2-...-vk`.
    pub fn label(&self) -> String {
        self.vertices.join("-")
    }

    /// Resolves the simplex against a graph, checking it is a clique there.
    pub fn indices_in(&self, g: &Graph) -> Result<Vec<usize>> {
        let idx = self.vertices.iter().map(|l| g.require(l)).collect::<Result<Vec<_>>>()?;
        if !g.is_clique(&idx) {
            return Err(Error::InvalidArgument(format!("{} is not a clique", self.label())));
        }
        Ok(idx)
    }

    /// Builds a simplex from labels, sorting and deduplicating.
    pub fn from_labels<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let mut vertices: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        vertices.sort();
        vertices.dedup();
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("a simplex needs at least one vertex".into()));
        }
        Ok(Self { vertices })
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

//! Recursive certification of pseudomanifolds.
//!
//! Every iterated link of a graph is the subgraph induced on the common
//! neighborhood of a clique, so a sub-certificate is fully determined by a
//! vertex set of the ambient graph and a level. Sub-certificates are memoized
//! on that key for the duration of one call.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RejectReason {
    /// Level 1 expects a single cycle.
    NotACycle,
    /// A cycle of length 3.
    CycleTooShort,
    /// Empty graph where a nonempty pseudomanifold of level `>= 0` was expected.
    LinkDimensionMismatch,
    /// Nonempty graph at level `-1`.
    EmptyExpected,
}

impl RejectReason {
    pub fn code(self) -> &'static str {
        match self {
            Self::NotACycle => "not-a-cycle",
            Self::CycleTooShort => "cycle-too-short",
            Self::LinkDimensionMismatch => "link-dimension-mismatch",
            Self::EmptyExpected => "empty-expected",
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accept,
    Reject,
}

/// Descent path through unit links to the offending subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub path: Vec<String>,
    pub reason: RejectReason,
}

impl Witness {
    /// Follows the path through `unit_link` calls and returns the
    /// offending subgraph.
    pub fn replay(&self, g: &Graph) -> crate::Result<Graph> {
        self.path.iter().try_fold(g.clone(), |current, v| current.unit_link(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PmCertificate {
    pub dimension: i32,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl PmCertificate {
    pub fn is_accept(&self) -> bool {
        self.verdict == Verdict::Accept
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    /// Re-derives the rejection: the replayed subgraph must fail the base
    /// check at its level with the recorded reason. Accepts replay trivially.
    pub fn replays(&self, g: &Graph) -> bool {
        let Some(w) = &self.witness else {
            return self.is_accept();
        };
        let Ok(sub) = w.replay(g) else {
            return false;
        };
        let level = self.dimension - w.path.len() as i32;
        local_failure(&sub, level) == Some(w.reason)
    }

    /// Human-readable account of a rejection, one line per descent step.
    pub fn explain(&self, g: &Graph) -> Vec<String> {
        let Some(w) = &self.witness else {
            return vec![format!("accepted as a {}-pseudomanifold", self.dimension)];
        };
        let mut lines = Vec::new();
        let mut current = g.clone();
        for (i, v) in w.path.iter().enumerate() {
            current = match current.unit_link(v) {
                Ok(link) => link,
                Err(e) => return vec![format!("witness does not replay: {e}")],
            };
            let who = if i == 0 {
                format!("link of vertex {v}")
            } else {
                format!("link of {} within the previous link", v)
            };
            lines.push(format!("{who} is {}", shape(&current)));
        }
        let level = self.dimension - w.path.len() as i32;
        lines.push(format!(
            "rejected ({}): {} is not a {level}-pseudomanifold",
            w.reason,
            shape(&current)
        ));
        lines
    }
}

fn shape(g: &Graph) -> String {
    match g.cycle_length() {
        Some(n) => format!("C{}", subscript(n)),
        None if g.is_empty() => "the empty graph".into(),
        None if g.is_complete() => format!("K{}", subscript(g.len())),
        None => format!("a graph with {} vertices and {} edges", g.len(), g.edge_count()),
    }
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap_or(0)).unwrap_or(c))
        .collect()
}

// Base-level checks that do not recurse; `None` at levels 0 and >= 2 means
// "recurse into links".
fn local_failure(g: &Graph, level: i32) -> Option<RejectReason> {
    if level < -1 {
        return Some(RejectReason::LinkDimensionMismatch);
    }
    if level == -1 {
        return (!g.is_empty()).then_some(RejectReason::EmptyExpected);
    }
    if g.is_empty() {
        return Some(RejectReason::LinkDimensionMismatch);
    }
    if level == 1 {
        return match g.cycle_length() {
            Some(n) if n >= 4 => None,
            Some(_) => Some(RejectReason::CycleTooShort),
            None => Some(RejectReason::NotACycle),
        };
    }
    None
}

type Failure = (Vec<usize>, RejectReason);

struct Certifier<'a> {
    g: &'a Graph,
    memo: Mutex<HashMap<(VertexSet, i32), Option<Failure>>>,
}

impl Certifier<'_> {
    fn check(&self, set: &VertexSet, level: i32) -> Option<Failure> {
        let count = set.count_ones(..);
        let leaf = |r: RejectReason| Some((Vec::new(), r));
        if level < -1 {
            return leaf(RejectReason::LinkDimensionMismatch);
        }
        if level == -1 {
            return if count == 0 {
                None
            } else {
                leaf(RejectReason::EmptyExpected)
            };
        }
        if count == 0 {
            return leaf(RejectReason::LinkDimensionMismatch);
        }
        if level == 1 {
            return local_failure(&self.g.induced(set), 1).and_then(leaf);
        }
        let key = (set.clone(), level);
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let vertices: Vec<usize> = set.ones().collect();
        // Smallest failing vertex wins, independent of scheduling.
        let result = par::find_map(&vertices, true, |&v| {
            let mut link = set.clone();
            link.intersect_with(self.g.neighbors(v));
            self.check(&link, level - 1).map(|(mut path, reason)| {
                path.insert(0, v);
                (path, reason)
            })
        });
        self.memo.lock().expect("memo lock").insert(key, result.clone());
        result
    }
}

/// Certifies `g` as a `d`-pseudomanifold, or returns a replayable witness.
///
/// Conventions: a 0-pseudomanifold is a nonempty edgeless graph; a
/// 1-pseudomanifold is exactly one cycle of length at least 4; above that the
/// ambient graph need not be connected.
pub fn is_pseudomanifold(g: &Graph, d: i32) -> PmCertificate {
    let certifier = Certifier {
        g,
        memo: Mutex::new(HashMap::new()),
    };
    match certifier.check(&g.vertex_set(), d) {
        None => PmCertificate {
            dimension: d,
            verdict: Verdict::Accept,
            witness: None,
        },
        Some((path, reason)) => PmCertificate {
            dimension: d,
            verdict: Verdict::Reject,
            witness: Some(Witness {
                path: path.iter().map(|&v| g.label(v).to_string()).collect(),
                reason,
            }),
        },
    }
}

/// Certificate at the graph's own clique dimension.
pub fn certify(g: &Graph) -> PmCertificate {
    is_pseudomanifold(g, g.dimension())
}

/// The dimension at which `g` certifies, if any.
pub fn pseudomanifold_dimension(g: &Graph) -> Option<i32> {
    let cert = certify(g);
    cert.is_accept().then_some(cert.dimension)
}

/// `sub` is a pseudomanifold of some dimension whose vertices and edges are
/// vertices and edges of `k`.
pub fn is_subpseudomanifold(sub: &Graph, k: &Graph) -> bool {
    sub.is_subgraph_of(k) && pseudomanifold_dimension(sub).is_some()
}

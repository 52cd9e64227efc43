//! Graph arithmetic that preserves pseudomanifolds: Zykov join, suspension,
//! sphere constructors, the Cartesian simplex product and Barycentric
//! refinement, plus the closed-form sphere chromatic predictions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cliques, families, Graph, VertexSet};
use crate::par;
use crate::recognition::pseudomanifold_dimension;

/// Label of the one-point graph `1` used by [`barycentric_refinement`].
pub const ONE_POINT_LABEL: &str = "1";

/// A join together with where each factor's vertices landed.
#[derive(Clone, Debug)]
pub struct Join {
    pub graph: Graph,
    /// `left[i]` is the join label of the left factor's vertex `i`.
    pub left: Vec<String>,
    pub right: Vec<String>,
}

/// Zykov join keeping the factor label maps.
///
/// Labels are kept as-is when the factors' label sets are disjoint;
/// otherwise every left label gets an `L.` prefix and every right label `R.`.
pub fn zykov_join_mapped(g: &Graph, h: &Graph) -> Join {
    let clash = g.labels().iter().any(|l| h.contains(l));
    let (left, right): (Vec<String>, Vec<String>) = if clash {
        (
            g.labels().iter().map(|l| format!("L.{l}")).collect(),
            h.labels().iter().map(|l| format!("R.{l}")).collect(),
        )
    } else {
        (g.labels().to_vec(), h.labels().to_vec())
    };
    let offset = g.len();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(h.edges().map(|(i, j)| (i + offset, j + offset)));
    edges.extend((0..g.len()).flat_map(|i| (0..h.len()).map(move |j| (i, j + offset))));
    let labels = left.iter().chain(&right).cloned().collect();
    Join {
        graph: Graph::from_indexed(labels, edges),
        left,
        right,
    }
}

/// Disjoint union plus every edge between the two factors.
pub fn zykov_join(g: &Graph, h: &Graph) -> Graph {
    zykov_join_mapped(g, h).graph
}

/// `G + S⁰` with two fresh apex labels `n<i>`, `s<i>` not already in `G`.
pub fn suspension(g: &Graph) -> Graph {
    let i = (0..)
        .find(|i| !g.contains(&format!("n{i}")) && !g.contains(&format!("s{i}")))
        .expect("some index is free");
    let poles = Graph::from_indexed(vec![format!("n{i}"), format!("s{i}")], std::iter::empty());
    zykov_join(g, &poles)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A sphere built as `C_{n1} + ... + C_{nr} + S⁰ + ... + S⁰`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereSpec {
    pub cycle_lengths: Vec<usize>,
    pub suspension_count: usize,
}

impl SphereSpec {
    pub fn new(cycle_lengths: Vec<usize>, suspension_count: usize) -> Result<Self> {
        if let Some(&n) = cycle_lengths.iter().find(|&&n| n < 4) {
            return Err(Error::InvalidSphereSpec(format!("cycle length {n} is below 4")));
        }
        if cycle_lengths.is_empty() && suspension_count == 0 {
            return Err(Error::InvalidSphereSpec("a sphere needs at least one factor".into()));
        }
        Ok(Self {
            cycle_lengths,
            suspension_count,
        })
    }

    /// Parses a comma-separated cycle list such as `4,4`; empty means no cycles.
    pub fn parse(cycles: &str, suspension_count: usize) -> Result<Self> {
        let lengths = cycles
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::InvalidSphereSpec(format!("`{s}` is not a cycle length")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(lengths, suspension_count)
    }

    /// `k = 2·(number of cycles) − 1 + suspensions`.
    pub fn dimension(&self) -> i32 {
        2 * self.cycle_lengths.len() as i32 - 1 + self.suspension_count as i32
    }

    /// Even when every cycle is even (vacuously for a pure suspension of
    /// `S⁰`), odd when every cycle is odd, `None` when mixed.
    pub fn parity(&self) -> Option<Parity> {
        if self.cycle_lengths.iter().all(|n| n % 2 == 0) {
            Some(Parity::Even)
        } else if self.cycle_lengths.iter().all(|n| n % 2 == 1) {
            Some(Parity::Odd)
        } else {
            None
        }
    }
}

impl fmt::Display for SphereSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cycle_lengths
            .iter()
            .map(|n| format!("C{n}"))
            .chain(std::iter::repeat_n("S0".to_string(), self.suspension_count))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Iterated join of the listed cycles, then the requested suspensions.
///
/// Cycle `i` uses labels `c<i>.<x>`, suspension `j` uses `s<j>.n`, `s<j>.s`.
pub fn sphere_from_spec(spec: &SphereSpec) -> Graph {
    let mut factors = Vec::new();
    for (i, &n) in spec.cycle_lengths.iter().enumerate() {
        let c = families::cycle(n).expect("validated length");
        factors.push(c.map_labels(|l| format!("c{i}.{l}")));
    }
    for j in 0..spec.suspension_count {
        factors.push(Graph::from_indexed(
            vec![format!("s{j}.n"), format!("s{j}.s")],
            std::iter::empty(),
        ));
    }
    factors.iter().fold(Graph::empty(), |acc, f| zykov_join(&acc, f))
}

/// Join of `k + 1` copies of `S⁰` on labels `x<i>+`, `x<i>-`.
pub fn cross_polytope(k: i32) -> Result<Graph> {
    if k < 0 {
        return Err(Error::InvalidArgument(format!(
            "cross polytope dimension must be >= 0, got {k}"
        )));
    }
    let labels: Vec<String> = (0..=k).flat_map(|i| [format!("x{i}+"), format!("x{i}-")]).collect();
    let n = labels.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a / 2 != b / 2)
        .collect();
    Ok(Graph::from_indexed(labels, edges))
}

/// `(G × H)₁`: vertices are pairs of nonempty cliques, adjacent when
/// distinct and ordered by componentwise containment.
///
/// Vertex labels are `(g|h)` with `g`, `h` the canonical clique strings.
pub fn cartesian_simplex_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.is_empty() || h.is_empty() {
        return Err(Error::InvalidArgument(
            "simplex product factors must be nonempty".into(),
        ));
    }
    let (cg, ch) = (cliques::all_cliques(g), cliques::all_cliques(h));
    let sg = containment(g, &cg);
    let sh = containment(h, &ch);
    let m = ch.len();
    let total = cg.len() * m;
    let rows = par::map_range(total, |p| {
        let (a, b) = (p / m, p % m);
        (p + 1..total)
            .filter(|&q| {
                let (c, d) = (q / m, q % m);
                (sg[a].contains(c) && sh[b].contains(d)) || (sg[c].contains(a) && sh[d].contains(b))
            })
            .collect::<Vec<_>>()
    });
    let clique_label = |graph: &Graph, c: &[usize]| graph.simplex(c).label();
    let labels = cg
        .iter()
        .flat_map(|a| ch.iter().map(move |b| (a, b)))
        .map(|(a, b)| format!("({}|{})", clique_label(g, a), clique_label(h, b)))
        .collect();
    let edges: Vec<(usize, usize)> = rows
        .into_iter()
        .enumerate()
        .flat_map(|(p, qs)| qs.into_iter().map(move |q| (p, q)))
        .collect();
    Ok(Graph::from_indexed(labels, edges))
}

// `out[a]` holds every clique index `c` with `a ⊆ c`.
fn containment(g: &Graph, cl: &[Vec<usize>]) -> Vec<VertexSet> {
    let sets: Vec<VertexSet> = cl
        .iter()
        .map(|c| {
            let mut s = VertexSet::with_capacity(g.len());
            s.extend(c.iter().copied());
            s
        })
        .collect();
    par::map_range(cl.len(), |a| {
        let mut row = VertexSet::with_capacity(cl.len());
        row.extend((0..cl.len()).filter(|&c| sets[a].is_subset(&sets[c])));
        row
    })
}

/// `(G × 1)₁`: the graph of nonempty cliques of `G` under strict containment.
pub fn barycentric_refinement(g: &Graph) -> Result<Graph> {
    let one = Graph::from_indexed(vec![ONE_POINT_LABEL.to_string()], std::iter::empty());
    cartesian_simplex_product(g, &one)
}

/// Closed-form sphere chromatic numbers next to the value the minimal-coloring
/// argument actually produces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpherePrediction {
    pub spec: SphereSpec,
    pub dimension: i32,
    /// `None` for mixed parity.
    pub parity: Option<Parity>,
    /// `2⌈(k+1)/2⌉` for even-cycle spheres, `3⌈(k+1)/2⌉` for odd-cycle ones.
    pub printed: Option<usize>,
    /// Even-cycle only: `S^{2j-1}` takes `2j` colors and `S^{2j} = S^{2j-1} + S⁰`
    /// takes `2j + 1`, i.e. `k + 1` in both cases.
    pub proof_trace: Option<usize>,
    /// Both values exist and disagree.
    pub divergent: bool,
}

impl SpherePrediction {
    pub fn has_prediction(&self) -> bool {
        self.printed.is_some()
    }
}

pub fn sphere_chromatic_prediction(spec: &SphereSpec) -> SpherePrediction {
    let k = spec.dimension();
    let half = ((k + 1) as usize).div_ceil(2);
    let parity = spec.parity();
    let (printed, proof_trace) = match parity {
        Some(Parity::Even) => (Some(2 * half), Some((k + 1) as usize)),
        Some(Parity::Odd) => (Some(3 * half), None),
        None => (None, None),
    };
    SpherePrediction {
        spec: spec.clone(),
        dimension: k,
        parity,
        printed,
        proof_trace,
        divergent: matches!((printed, proof_trace), (Some(a), Some(b)) if a != b),
    }
}

/// Measured dimension of `(K × K′)₁` for certified factors of dimensions
/// `m` and `n`, against the candidate values `m + n` and `m + n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDimensionReport {
    pub left_dimension: i32,
    pub right_dimension: i32,
    pub vertices: usize,
    /// Clique dimension of the product.
    pub measured_dimension: i32,
    /// Dimension at which the product certifies, if it does.
    pub certified_dimension: Option<i32>,
    pub matches_sum: bool,
    pub matches_sum_plus_one: bool,
    /// The measured dimension is not `m + n + 1`.
    pub discrepancy: bool,
}

pub fn product_dimension_report(k: &Graph, k2: &Graph) -> Result<ProductDimensionReport> {
    let m = pseudomanifold_dimension(k).ok_or_else(|| Error::NotCertified(" (left factor)".into()))?;
    let n = pseudomanifold_dimension(k2).ok_or_else(|| Error::NotCertified(" (right factor)".into()))?;
    let product = cartesian_simplex_product(k, k2)?;
    let measured = product.dimension();
    Ok(ProductDimensionReport {
        left_dimension: m,
        right_dimension: n,
        vertices: product.len(),
        measured_dimension: measured,
        certified_dimension: pseudomanifold_dimension(&product),
        matches_sum: measured == m + n,
        matches_sum_plus_one: measured == m + n + 1,
        discrepancy: measured != m + n + 1,
    })
}

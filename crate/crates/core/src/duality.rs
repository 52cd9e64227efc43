//! Complementary duals, facet dual graphs, forest peeling and Fisk varieties.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arithmetic::zykov_join_mapped;
use crate::error::{Error, Result};
use crate::graph::{cliques, Graph, Simplex, VertexSet};
use crate::par;
use crate::recognition::pseudomanifold_dimension;

/// Subgraph induced on the common neighborhood of `h`; `G` itself for
/// empty `h`.
pub fn complementary_dual<S: AsRef<str>>(g: &Graph, h: &[S]) -> Result<Graph> {
    let set = g.set_of(h)?;
    Ok(g.induced(&common_neighbors(g, &set)))
}

pub(crate) fn common_neighbors(g: &Graph, set: &VertexSet) -> VertexSet {
    set.ones().fold(g.vertex_set(), |mut acc, v| {
        acc.intersect_with(g.neighbors(v));
        acc
    })
}

/// The five shapes a complementary dual can take in a pseudomanifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DualClass {
    Empty,
    Whole,
    /// `K_n` with `n >= 1`.
    Complete {
        size: usize,
    },
    /// Cone vertex over a pseudomanifold base.
    Pyramid {
        apex: String,
        base_dimension: i32,
    },
    Subpseudomanifold {
        dimension: i32,
    },
    /// None of the above verified.
    Unclassified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub class: DualClass,
    pub dual: Graph,
}

/// Classifies `Ĥ` in a certified pseudomanifold, testing Empty, Whole,
/// Complete, Pyramid, Subpseudomanifold in that order.
pub fn classify_complementary_dual<S: AsRef<str>>(k: &Graph, h: &[S]) -> Result<Classification> {
    if pseudomanifold_dimension(k).is_none() {
        return Err(Error::NotCertified(String::new()));
    }
    let dual = complementary_dual(k, h)?;
    let class = if dual.is_empty() {
        DualClass::Empty
    } else if dual.len() == k.len() {
        DualClass::Whole
    } else if dual.is_complete() {
        DualClass::Complete { size: dual.len() }
    } else if let Some((apex, base_dimension)) = pyramid_apex(&dual) {
        DualClass::Pyramid { apex, base_dimension }
    } else if let Some(dimension) = pseudomanifold_dimension(&dual) {
        DualClass::Subpseudomanifold { dimension }
    } else {
        DualClass::Unclassified
    };
    Ok(Classification { class, dual })
}

// A vertex adjacent to all others whose removal leaves a pseudomanifold.
fn pyramid_apex(g: &Graph) -> Option<(String, i32)> {
    (0..g.len()).filter(|&v| g.degree(v) + 1 == g.len()).find_map(|v| {
        let mut rest = g.vertex_set();
        rest.set(v, false);
        let base = g.induced(&rest);
        pseudomanifold_dimension(&base)
            .filter(|&d| d >= 0)
            .map(|d| (g.label(v).to_string(), d))
    })
}

/// Facet adjacency of a pure graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraph {
    pub source_dimension: i32,
    pub facets: Vec<Simplex>,
    /// `(i, j, shared face)` with `i < j`, sorted.
    pub adjacency: Vec<(usize, usize, Simplex)>,
}

impl DualGraph {
    /// Graph on canonical facet strings `v1-v2-...`.
    pub fn to_graph(&self) -> Graph {
        Graph::from_indexed(
            self.facets.iter().map(Simplex::label).collect(),
            self.adjacency.iter().map(|&(i, j, _)| (i, j)).collect::<Vec<_>>(),
        )
    }

    pub fn degree(&self, facet: usize) -> usize {
        self.adjacency
            .iter()
            .filter(|&&(i, j, _)| i == facet || j == facet)
            .count()
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        let mut deg = vec![0usize; self.facets.len()];
        for &(i, j, _) in &self.adjacency {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg.iter().all(|&d| d == degree)
    }

    pub fn has_triangle(&self) -> bool {
        let g = self.to_graph();
        let found = g
            .edges()
            .any(|(i, j)| g.neighbors(i).intersection(g.neighbors(j)).next().is_some());
        found
    }

    /// Number of facets containing each recorded shared face.
    pub fn face_multiplicities(&self) -> Vec<usize> {
        self.adjacency
            .iter()
            .map(|(_, _, face)| {
                self.facets
                    .iter()
                    .filter(|f| face.vertices().iter().all(|v| f.vertices().contains(v)))
                    .count()
            })
            .collect()
    }
}

/// Facets of a pure graph, adjacent when they share a codimension-one face.
pub fn dual_graph(k: &Graph) -> Result<DualGraph> {
    let raw = cliques::maximal_cliques(k);
    if let (Some(small), Some(large)) = (raw.iter().min_by_key(|c| c.len()), raw.iter().max_by_key(|c| c.len())) {
        if small.len() != large.len() {
            return Err(Error::NotPure {
                small: k.simplex(small).label(),
                small_len: small.len(),
                large: k.simplex(large).label(),
                large_len: large.len(),
            });
        }
    }
    let d = raw.first().map_or(-1, |c| c.len() as i32 - 1);
    let mut by_face: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (fi, facet) in raw.iter().enumerate() {
        for skip in 0..facet.len() {
            let mut face = facet.clone();
            face.remove(skip);
            by_face.entry(face).or_default().push(fi);
        }
    }
    let mut adjacency = Vec::new();
    for (face, owners) in by_face {
        for (a, &i) in owners.iter().enumerate() {
            for &j in &owners[a + 1..] {
                adjacency.push((i, j, k.simplex(&face)));
            }
        }
    }
    adjacency.sort_by_key(|a| (a.0, a.1));
    Ok(DualGraph {
        source_dimension: d,
        facets: raw.iter().map(|c| k.simplex(c)).collect(),
        adjacency,
    })
}

/// Disjoint acyclic edge sets covering every dual edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestPeel {
    pub forests: Vec<Vec<(usize, usize)>>,
}

impl ForestPeel {
    pub fn edge_count(&self) -> usize {
        self.forests.iter().map(Vec::len).sum()
    }
}

/// Repeatedly removes a depth-first spanning forest of the remaining dual
/// edges, starting each tree at the smallest unvisited facet and visiting
/// neighbors in ascending order.
pub fn forest_peel(d: &DualGraph) -> ForestPeel {
    let n = d.facets.len();
    let mut remaining: Vec<VertexSet> = vec![VertexSet::with_capacity(n); n];
    for &(i, j, _) in &d.adjacency {
        remaining[i].insert(j);
        remaining[j].insert(i);
    }
    let mut forests = Vec::new();
    while remaining.iter().any(|r| !r.is_clear()) {
        let mut seen = VertexSet::with_capacity(n);
        let mut forest = Vec::new();
        for root in 0..n {
            if seen.put(root) {
                continue;
            }
            let mut stack = vec![root];
            while let Some(&u) = stack.last() {
                match remaining[u].ones().find(|&w| !seen.contains(w)) {
                    Some(w) => {
                        seen.insert(w);
                        forest.push((u.min(w), u.max(w)));
                        stack.push(w);
                    }
                    None => {
                        stack.pop();
                    }
                }
            }
        }
        for &(i, j) in &forest {
            remaining[i].set(j, false);
            remaining[j].set(i, false);
        }
        forest.sort_unstable();
        forests.push(forest);
    }
    if forests.is_empty() {
        forests.push(Vec::new());
    }
    ForestPeel { forests }
}

/// True iff the edge set has no cycle (union-find).
pub fn is_acyclic(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    edges.iter().all(|&(a, b)| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
        ra != rb
    })
}

/// Common neighborhood of a `(d−2)`-simplex in a certified
/// `d`-pseudomanifold with `d >= 2`.
pub fn dual_link(k: &Graph, x: &Simplex) -> Result<Graph> {
    let d = pseudomanifold_dimension(k).ok_or_else(|| Error::NotCertified(String::new()))?;
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "dual links need dimension >= 2, got {d}"
        )));
    }
    if x.dimension() != d - 2 {
        return Err(Error::SimplexDimension {
            expected: i64::from(d - 2),
            got: x.label(),
        });
    }
    x.indices_in(k)?;
    complementary_dual(k, x.vertices())
}

/// Odd part of a pseudomanifold: `(d−2)`-simplices with odd dual links and
/// the subgraph their vertices generate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiskRecord {
    pub odd_simplices: Vec<Simplex>,
    pub subgraph: Graph,
}

/// For `d = 1` the whole cycle when odd and empty when even; for `d >= 2`
/// the odd `(d−2)`-simplices and their generated subgraph.
pub fn fisk_variety(k: &Graph) -> Result<FiskRecord> {
    let d = pseudomanifold_dimension(k).ok_or_else(|| Error::NotCertified(String::new()))?;
    if d < 1 {
        return Err(Error::InvalidArgument(format!(
            "Fisk variety needs dimension >= 1, got {d}"
        )));
    }
    if d == 1 {
        let odd = k.len() % 2 == 1;
        return Ok(FiskRecord {
            odd_simplices: Vec::new(),
            subgraph: if odd { k.clone() } else { Graph::empty() },
        });
    }
    let candidates = cliques::cliques_of_size(k, (d - 1) as usize);
    let odd: Vec<Option<Vec<usize>>> = par::map_slice(&candidates, |c| {
        let mut set = VertexSet::with_capacity(k.len());
        set.extend(c.iter().copied());
        let link = common_neighbors(k, &set);
        (link.count_ones(..) % 2 == 1).then(|| c.clone())
    });
    let odd: Vec<Vec<usize>> = odd.into_iter().flatten().collect();
    let mut support = VertexSet::with_capacity(k.len());
    for c in &odd {
        support.extend(c.iter().copied());
    }
    Ok(FiskRecord {
        odd_simplices: odd.iter().map(|c| k.simplex(c)).collect(),
        subgraph: k.induced(&support),
    })
}

/// Both sides of `O(K + K′) = K + O(K′) ∪ O(K) + K′`, as subgraphs of the join.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiskJoinCheck {
    pub join_variety: FiskRecord,
    /// Union of `K + O(K′)` and `O(K) + K′` inside the join.
    pub formula_side: Graph,
    pub sides_equal: bool,
}

pub fn fisk_join_check(k: &Graph, k2: &Graph) -> Result<FiskJoinCheck> {
    let join = zykov_join_mapped(k, k2);
    let ok = fisk_variety(k)?;
    let ok2 = fisk_variety(k2)?;
    let join_variety = fisk_variety(&join.graph)?;
    let left_of = |g: &Graph, map: &[String], sub: &Graph| -> Result<VertexSet> {
        join.graph.set_of(
            &sub.labels()
                .iter()
                .map(|l| map[g.index_of(l).expect("subgraph label")].clone())
                .collect::<Vec<_>>(),
        )
    };
    let k_all = left_of(k, &join.left, k)?;
    let k2_all = left_of(k2, &join.right, k2)?;
    let ok_set = left_of(k, &join.left, &ok.subgraph)?;
    let ok2_set = left_of(k2, &join.right, &ok2.subgraph)?;
    let mut a = k_all.clone();
    a.union_with(&ok2_set);
    let mut b = ok_set;
    b.union_with(&k2_all);
    let formula_side = join.graph.induced(&a).union(&join.graph.induced(&b));
    Ok(FiskJoinCheck {
        sides_equal: formula_side == join_variety.subgraph,
        join_variety,
        formula_side,
    })
}

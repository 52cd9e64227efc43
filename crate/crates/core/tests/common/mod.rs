//! Shared fixtures: the pseudomanifold corpus, random graphs, exhaustive
//! small-graph generation, and the brute-force chromatic oracle.

#![allow(dead_code)]

use dpm_core::arithmetic::{
    barycentric_refinement, cartesian_simplex_product, cross_polytope, sphere_from_spec, suspension, zykov_join,
    SphereSpec,
};
use dpm_core::coloring::Decomposition;
use dpm_core::graph::families::{cycle, octahedron};
use dpm_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub dimension: i32,
    pub decomposition: Option<Decomposition>,
}

fn spec(cycles: &[usize], s: usize) -> SphereSpec {
    SphereSpec::new(cycles.to_vec(), s).unwrap()
}

fn sphere(cycles: &[usize], s: usize) -> Graph {
    sphere_from_spec(&spec(cycles, s))
}

fn plain(name: impl Into<String>, graph: Graph, dimension: i32) -> Instance {
    Instance {
        name: name.into(),
        graph,
        dimension,
        decomposition: None,
    }
}

// `S^k + K′` with the construction kept as metadata.
fn joined(cycles: &[usize], s: usize, rem_name: &str, remainder: Graph, dimension: i32) -> Instance {
    let remainder = remainder.map_labels(|l| format!("r.{l}"));
    let sp = spec(cycles, s);
    Instance {
        name: format!("{sp} + {rem_name}"),
        graph: zykov_join(&sphere_from_spec(&sp), &remainder),
        dimension,
        decomposition: Some(Decomposition { sphere: sp, remainder }),
    }
}

/// Certified pseudomanifolds of dimension 1 through 7 built from cycles,
/// joins, suspensions, cross polytopes, products and refinements.
pub fn pseudomanifold_corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 4..=12 {
        out.push(plain(format!("C{n}"), cycle(n).unwrap(), 1));
    }
    for (a, b) in [(4, 4), (4, 5), (4, 6), (5, 5), (5, 6), (6, 6)] {
        out.push(plain(format!("C{a} + C{b}"), sphere(&[a, b], 0), 3));
    }
    for cs in [[4, 4, 4], [4, 4, 5], [4, 5, 5], [5, 5, 5]] {
        out.push(plain(
            format!("C{} + C{} + C{}", cs[0], cs[1], cs[2]),
            sphere(&cs, 0),
            5,
        ));
    }
    for n in 4..=8 {
        out.push(plain(format!("S(C{n})"), suspension(&cycle(n).unwrap()), 2));
    }
    out.push(plain("S(S(C5))", suspension(&suspension(&cycle(5).unwrap())), 3));
    out.push(plain("C4 + C5 + S0", sphere(&[4, 5], 1), 4));
    out.push(plain("C5 + C5 + S0", sphere(&[5, 5], 1), 4));
    for k in 1..=5 {
        out.push(plain(format!("cross polytope {k}"), cross_polytope(k).unwrap(), k));
    }
    let c4 = cycle(4).unwrap();
    out.push(plain("(C4 x C4)_1", cartesian_simplex_product(&c4, &c4).unwrap(), 2));
    out.push(plain(
        "refined octahedron",
        barycentric_refinement(&octahedron()).unwrap(),
        2,
    ));
    out.push(plain(
        "refined C5",
        barycentric_refinement(&cycle(5).unwrap()).unwrap(),
        1,
    ));
    out.extend(decomposed_corpus());
    out
}

/// Instances expressible as `S^k + K′`, construction retained.
pub fn decomposed_corpus() -> Vec<Instance> {
    let c = |n| cycle(n).unwrap();
    vec![
        joined(&[4], 0, "C5", c(5), 3),
        joined(&[5], 0, "C4", c(4), 3),
        joined(&[4], 0, "C4", c(4), 3),
        joined(&[4], 0, "octahedron", octahedron(), 4),
        joined(&[5], 0, "octahedron", octahedron(), 4),
        joined(&[], 1, "C5", c(5), 2),
        joined(&[4], 1, "S(C5)", suspension(&c(5)), 5),
        joined(&[5, 5], 0, "C5", c(5), 5),
        joined(&[4, 4], 0, "C4", c(4), 5),
        joined(&[5, 5], 0, "C4", c(4), 5),
        joined(&[4, 4], 1, "C5", c(5), 6),
        joined(&[4, 4, 4], 0, "C4", c(4), 7),
        joined(&[5, 5, 5], 0, "C5", c(5), 7),
    ]
}

/// Erdős–Rényi graph on `n` vertices with default labels.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let labels = dpm_core::graph::families::default_labels(n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Graph::build(labels, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All connected graphs on `1..=max_n` vertices up to isomorphism, grouped
/// by vertex count. Every connected graph on `n` vertices has a non-cut
/// vertex, so extending each connected `(n−1)`-vertex graph by one vertex
/// with every nonempty neighbor set reaches every class.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::build(["a"], Vec::<(&str, &str)>::new()).unwrap()]];
    for n in 2..=max_n {
        let labels = dpm_core::graph::families::default_labels(n);
        let mut reps: std::collections::HashMap<(usize, Vec<usize>, usize), Vec<Graph>> = Default::default();
        let mut order = Vec::new();
        for base in &levels[n - 2] {
            for mask in 1u32..(1 << (n - 1)) {
                let mut edges: Vec<(String, String)> = base
                    .edge_labels()
                    .map(|(a, b)| (a.to_string(), b.to_string()))
                    .collect();
                for i in 0..n - 1 {
                    if mask & (1 << i) != 0 {
                        edges.push((labels[i].clone(), labels[n - 1].clone()));
                    }
                }
                let g = Graph::build(labels.clone(), edges).unwrap();
                let key = invariant(&g);
                let bucket = reps.entry(key.clone()).or_default();
                if !bucket.iter().any(|h| h.is_isomorphic(&g)) {
                    bucket.push(g.clone());
                    order.push(g);
                }
            }
        }
        levels.push(order);
    }
    levels
}

fn invariant(g: &Graph) -> (usize, Vec<usize>, usize) {
    let mut degrees: Vec<usize> = (0..g.len()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    let triangles = g
        .edges()
        .map(|(i, j)| g.neighbors(i).intersection(g.neighbors(j)).count())
        .sum::<usize>();
    (g.edge_count(), degrees, triangles)
}

/// Smallest `k` admitting a proper assignment, by trying every assignment
/// of `k` colors (vertex 0 pinned to color 0).
pub fn brute_force_chromatic(g: &Graph) -> usize {
    let n = g.len();
    if n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(i, j)| colors[i] != colors[j]) {
                return k;
            }
            // odometer over vertices 1..n
            let mut pos = 1;
            while pos < n {
                colors[pos] += 1;
                if colors[pos] < k {
                    break;
                }
                colors[pos] = 0;
                pos += 1;
            }
            if pos >= n {
                break;
            }
        }
    }
    unreachable!("n colors always suffice")
}

pub fn rng_range(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi)
}

//! Clique machinery on bitset adjacency.
//!
//! Enumeration is exponential in the worst case; the graphs handled here are
//! desk-scale (a few hundred vertices at most, usually far fewer).

use super::{Graph, VertexSet};

/// All inclusion-maximal cliques, each sorted, in lexicographic order.
///
/// Bron–Kerbosch with Tomita pivoting (pivot maximizes `|P ∩ N(u)|`).
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    if g.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut r = Vec::new();
    expand(g, &mut r, g.vertex_set(), VertexSet::with_capacity(g.len()), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(g: &Graph, r: &mut Vec<usize>, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<Vec<usize>>) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .union(&x)
        .max_by_key(|&u| p.intersection(g.neighbors(u)).count())
        .expect("P ∪ X is nonempty");
    let mut candidates = p.clone();
    candidates.difference_with(g.neighbors(pivot));
    for v in candidates.ones() {
        let nv = g.neighbors(v);
        let mut next_p = p.clone();
        next_p.intersect_with(nv);
        let mut next_x = x.clone();
        next_x.intersect_with(nv);
        r.push(v);
        expand(g, r, next_p, next_x, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// Every nonempty clique, ordered by size and then lexicographically.
pub fn all_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    grow(g, &mut current, &g.vertex_set(), &mut out, usize::MAX);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Every clique with exactly `size` vertices, in lexicographic order.
pub fn cliques_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    grow(g, &mut current, &g.vertex_set(), &mut out, size);
    out.retain(|c| c.len() == size);
    out.sort();
    out
}

// Extends `current` with vertices of `allowed` larger than its last element.
fn grow(g: &Graph, current: &mut Vec<usize>, allowed: &VertexSet, out: &mut Vec<Vec<usize>>, max_size: usize) {
    let floor = current.last().map_or(0, |&v| v + 1);
    for v in allowed.ones().filter(|&v| v >= floor) {
        current.push(v);
        out.push(current.clone());
        if current.len() < max_size {
            let mut next = allowed.clone();
            next.intersect_with(g.neighbors(v));
            grow(g, current, &next, out, max_size);
        }
        current.pop();
    }
}

/// A maximum clique (lexicographically first among maximum ones found by
/// the search order), empty for the empty graph.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    search_max(g, &mut current, g.vertex_set(), &mut best);
    best.sort_unstable();
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

fn search_max(g: &Graph, current: &mut Vec<usize>, mut p: VertexSet, best: &mut Vec<usize>) {
    if p.is_clear() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    while let Some(v) = p.minimum() {
        // Greedy coloring of P bounds the clique size obtainable from it.
        if current.len() + color_bound(g, &p) <= best.len() {
            return;
        }
        let mut next = p.clone();
        next.intersect_with(g.neighbors(v));
        current.push(v);
        search_max(g, current, next, best);
        current.pop();
        p.set(v, false);
    }
}

fn color_bound(g: &Graph, p: &VertexSet) -> usize {
    let mut uncolored = p.clone();
    let mut classes = 0;
    while !uncolored.is_clear() {
        classes += 1;
        let mut available = uncolored.clone();
        while let Some(v) = available.minimum() {
            uncolored.set(v, false);
            available.set(v, false);
            available.difference_with(g.neighbors(v));
        }
    }
    classes
}

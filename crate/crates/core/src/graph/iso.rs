use std::collections::BTreeMap;

use super::{Graph, VertexSet};

pub(super) fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.len() != h.len() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (cg, ch) = refine(g, h);
    let histogram = |colors: &[usize]| {
        let mut m = BTreeMap::new();
        for &c in colors {
            *m.entry(c).or_insert(0usize) += 1;
        }
        m
    };
    if histogram(&cg) != histogram(&ch) {
        return false;
    }
    let order = matching_order(g, &cg);
    let mut state = Search {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        mapping: vec![usize::MAX; g.len()],
        used: VertexSet::with_capacity(h.len()),
    };
    state.extend(0)
}

/// Joint color refinement of both graphs until the partition is stable.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = (0..g.len()).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..h.len()).map(|v| h.degree(v)).collect();
    let mut classes = 0;
    loop {
        let signature = |graph: &Graph, colors: &[usize], v: usize| {
            let mut around: Vec<usize> = graph.neighbors(v).ones().map(|w| colors[w]).collect();
            around.sort_unstable();
            (colors[v], around)
        };
        let sg: Vec<_> = (0..g.len()).map(|v| signature(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.len()).map(|v| signature(h, &ch, v)).collect();
        let mut palette = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            let next = palette.len();
            palette.entry(s.clone()).or_insert(next);
        }
        cg = sg.iter().map(|s| palette[s]).collect();
        ch = sh.iter().map(|s| palette[s]).collect();
        if palette.len() == classes {
            return (cg, ch);
        }
        classes = palette.len();
    }
}

// Vertices of `g` ordered so each one (after the first of its component) has
// as many already-placed neighbors as possible; ties go to rarer colors.
fn matching_order(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = g.len();
    let mut freq = BTreeMap::new();
    for &c in colors {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = VertexSet::with_capacity(n);
    let mut order = Vec::with_capacity(n);
    let mut links = vec![0usize; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (links[v], std::cmp::Reverse(freq[&colors[v]]), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed.insert(next);
        order.push(next);
        for w in g.neighbors(next).ones() {
            links[w] += 1;
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
    mapping: Vec<usize>,
    used: VertexSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.h.len() {
            if self.used.contains(w) || self.cg[v] != self.ch[w] || !self.consistent(depth, v, w) {
                continue;
            }
            self.mapping[v] = w;
            self.used.insert(w);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.set(w, false);
            self.mapping[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&u| self.g.is_adjacent(u, v) == self.h.is_adjacent(self.mapping[u], w))
    }
}

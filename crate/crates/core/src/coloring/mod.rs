//! Vertex colorings: verification, greedy and exact solvers, the dual-forest
//! construction, and bound reports.

mod bounds;
mod exact;
mod forest;
mod table1;

pub use bounds::{
    check_bounds, close_sphere_dimension, BoundCheck, BoundKind, BoundsReport, ChromaticValue, Decomposition,
    DecompositionInfo,
};
pub use exact::{chromatic_number_exact, dsatur_coloring, Chromatic, SolverOptions};
pub use forest::forest_coloring;
pub use table1::{table1_report, Table1Check, Table1Report, Table1Row, TABLE1};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arithmetic::zykov_join_mapped;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex label → color index, with the palette it draws from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub palette_size: usize,
    pub assignment: BTreeMap<String, usize>,
}

impl Coloring {
    /// Palette is `max color + 1` (0 when empty).
    pub(crate) fn from_indices(g: &Graph, colors: &[usize]) -> Self {
        let assignment = colors
            .iter()
            .enumerate()
            .map(|(v, &c)| (g.label(v).to_string(), c))
            .collect();
        Self {
            palette_size: colors.iter().max().map_or(0, |&m| m + 1),
            assignment,
        }
    }

    /// Colors in vertex-index order, if every vertex of `g` is assigned.
    pub fn colors_in(&self, g: &Graph) -> Option<Vec<usize>> {
        g.labels().iter().map(|l| self.assignment.get(l).copied()).collect()
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<usize> = self.assignment.values().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }
}

/// Total on exactly `V(g)`, within the palette, and no monochromatic edge.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> bool {
    if c.assignment.len() != g.len() {
        return false;
    }
    let Some(colors) = c.colors_in(g) else {
        return false;
    };
    colors.iter().all(|&x| x < c.palette_size) && g.edges().all(|(i, j)| colors[i] != colors[j])
}

/// First-fit along `order`, which must be a permutation of the vertices.
pub fn greedy_coloring<S: AsRef<str>>(g: &Graph, order: &[S]) -> Result<Coloring> {
    if order.len() != g.len() {
        return Err(Error::BadPermutation(format!(
            "{} entries for {} vertices",
            order.len(),
            g.len()
        )));
    }
    let mut seen = g.vertex_set();
    seen.clear();
    let mut idx = Vec::with_capacity(order.len());
    for l in order {
        let v = g
            .index_of(l.as_ref())
            .ok_or_else(|| Error::BadPermutation(format!("unknown vertex `{}`", l.as_ref())))?;
        if seen.put(v) {
            return Err(Error::BadPermutation(format!("vertex `{}` repeated", l.as_ref())));
        }
        idx.push(v);
    }
    Ok(Coloring::from_indices(g, &first_fit(g, &idx)))
}

pub(crate) fn first_fit(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.len()];
    for &v in order {
        let used: Vec<usize> = g
            .neighbors(v)
            .ones()
            .map(|w| colors[w])
            .filter(|&c| c != usize::MAX)
            .collect();
        colors[v] = (0..).find(|c| !used.contains(c)).expect("some color is free");
    }
    colors
}

/// Coloring of `G + H` from colorings of the factors, with `H`'s colors
/// shifted past `G`'s palette. Labels follow [`zykov_join_mapped`].
pub fn join_coloring(g: &Graph, cg: &Coloring, h: &Graph, ch: &Coloring) -> Result<Coloring> {
    if !verify_coloring(g, cg) {
        return Err(Error::ImproperColoring("left factor".into()));
    }
    if !verify_coloring(h, ch) {
        return Err(Error::ImproperColoring("right factor".into()));
    }
    let join = zykov_join_mapped(g, h);
    let mut assignment = BTreeMap::new();
    for (v, label) in join.left.iter().enumerate() {
        assignment.insert(label.clone(), cg.assignment[g.label(v)]);
    }
    for (v, label) in join.right.iter().enumerate() {
        assignment.insert(label.clone(), ch.assignment[h.label(v)] + cg.palette_size);
    }
    Ok(Coloring {
        palette_size: cg.palette_size + ch.palette_size,
        assignment,
    })
}

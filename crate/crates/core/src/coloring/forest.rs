//! Coloring driven by a forest decomposition of the facet dual.
//!
//! Each of the first two peeled forests proposes a color for every vertex
//! from its own batch of `d + 1` colors: trees are walked breadth-first from
//! their root facet, the root's vertices take distinct batch colors, and
//! crossing a dual edge hands the new vertex the color of the vertex it
//! replaces. Facets untouched by a forest are trivial trees of it. Vertices
//! are then fixed in label order, taking the first proposal that does not
//! clash with an already fixed neighbor, and falling back to first-fit
//! (inside `0..2d+2` first, beyond it only if forced).

use std::collections::VecDeque;

use super::Coloring;
use crate::duality::{dual_graph, forest_peel};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::PmCertificate;

const UNSET: usize = usize::MAX;

pub fn forest_coloring(k: &Graph, cert: &PmCertificate) -> Result<Coloring> {
    if !cert.is_accept() || k.dimension() != cert.dimension {
        return Err(Error::NotCertified(format!(" at dimension {}", cert.dimension)));
    }
    if k.is_empty() {
        return Ok(Coloring::default());
    }
    let d = cert.dimension as usize;
    let batch = d + 1;
    let dual = dual_graph(k)?;
    let peel = forest_peel(&dual);
    let facets: Vec<Vec<usize>> = dual
        .facets
        .iter()
        .map(|f| f.indices_in(k).expect("facet of k"))
        .collect();

    let none = Vec::new();
    let proposals: Vec<Vec<usize>> = (0..2)
        .map(|i| propose(k, &facets, peel.forests.get(i).unwrap_or(&none), i * batch, batch))
        .collect();

    let palette = 2 * batch;
    let mut colors = vec![UNSET; k.len()];
    for v in 0..k.len() {
        let clash = |c: usize, colors: &[usize]| k.neighbors(v).ones().any(|w| colors[w] == c);
        let pick = proposals
            .iter()
            .map(|p| p[v])
            .find(|&c| c != UNSET && !clash(c, &colors))
            .or_else(|| (0..palette).find(|&c| !clash(c, &colors)))
            .unwrap_or_else(|| (palette..).find(|&c| !clash(c, &colors)).expect("a free color exists"));
        colors[v] = pick;
    }
    Ok(Coloring::from_indices(k, &colors))
}

// One color proposal per vertex from `offset..offset + batch`.
fn propose(k: &Graph, facets: &[Vec<usize>], forest: &[(usize, usize)], offset: usize, batch: usize) -> Vec<usize> {
    let n = facets.len();
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in forest {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut proposal = vec![UNSET; k.len()];
    let mut seen = vec![false; n];
    let first_free = |facet: &[usize], proposal: &[usize]| {
        (offset..offset + batch).find(|c| facet.iter().all(|&u| proposal[u] != *c))
    };
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        for &v in &facets[root] {
            if proposal[v] == UNSET {
                if let Some(c) = first_free(&facets[root], &proposal) {
                    proposal[v] = c;
                }
            }
        }
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            for &t in &adj[f] {
                if seen[t] {
                    continue;
                }
                seen[t] = true;
                let entering = facets[t].iter().copied().find(|v| !facets[f].contains(v));
                let leaving = facets[f].iter().copied().find(|v| !facets[t].contains(v));
                if let (Some(v), Some(u)) = (entering, leaving) {
                    if proposal[v] == UNSET {
                        let inherited = proposal[u];
                        let taken = facets[t].iter().any(|&w| w != v && proposal[w] == inherited);
                        proposal[v] = if inherited != UNSET && !taken {
                            inherited
                        } else {
                            first_free(&facets[t], &proposal).unwrap_or(UNSET)
                        };
                    }
                }
                queue.push_back(t);
            }
        }
    }
    proposal
}

//! Discrete pseudomanifolds: construction, certification, duality and
//! coloring.
//!
//! A discrete `d`-pseudomanifold is a finite simple graph whose every unit
//! link is a `(d-1)`-pseudomanifold, bottoming out at the empty graph
//! (`d = -1`), edgeless graphs (`d = 0`) and single cycles `C_n` with
//! `n >= 4` (`d = 1`).
//!
//! Inner loops (per-vertex link certification, clique products, exact
//! coloring subtrees, per-simplex dual links) run on rayon when the default
//! `parallel` feature is on and sequentially otherwise; results are
//! identical either way.

pub mod arithmetic;
pub mod coloring;
pub mod duality;
pub mod error;
pub mod graph;
pub(crate) mod par;
pub mod recognition;

pub use error::{Error, Result};
pub use graph::{Graph, Simplex, VertexSet};

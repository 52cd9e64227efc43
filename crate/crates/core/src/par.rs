//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature every helper fans out over rayon's current
//! pool; without it the same code runs on the calling thread. Results are
//! always in input order, so output never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, preserving order.
#[cfg(feature = "parallel")]
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Maps `f` over a slice, preserving order.
#[cfg(feature = "parallel")]
pub fn map_slice<S, T, F>(items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<S, T, F>(items: &[S], f: F) -> Vec<T>
where
    F: Fn(&S) -> T,
{
    items.iter().map(f).collect()
}

/// First (in input order) `Some` produced by `f`.
///
/// When `ordered` is false the parallel build may return any hit, which is
/// cheaper when the caller does not need a reproducible witness.
#[cfg(feature = "parallel")]
pub fn find_map<S, T, F>(items: &[S], ordered: bool, f: F) -> Option<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> Option<T> + Sync + Send,
{
    if ordered {
        items.par_iter().find_map_first(f)
    } else {
        items.par_iter().find_map_any(f)
    }
}

#[cfg(not(feature = "parallel"))]
pub fn find_map<S, T, F>(items: &[S], _ordered: bool, f: F) -> Option<T>
where
    F: Fn(&S) -> Option<T>,
{
    items.iter().find_map(f)
}

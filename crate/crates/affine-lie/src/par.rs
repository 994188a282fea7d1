//! Data-parallel execution helpers.
//!
//! With the `parallel` feature (default) these fan out over rayon; without it
//! they fall back to plain sequential iteration with identical results. The
//! outputs are index-ordered either way, so verdicts and first-violation
//! reports do not depend on thread scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, collecting results in index order.
pub fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// First index (in index order) where `f` returns `Some`, with its value.
pub fn find_first<U, F>(n: usize, f: F) -> Option<(usize, U)>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .filter_map(|i| f(i).map(|u| (i, u)))
            .min_by_key(|(i, _)| *i)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).find_map(|i| f(i).map(|u| (i, u)))
    }
}


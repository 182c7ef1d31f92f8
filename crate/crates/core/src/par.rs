//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) these run on the rayon global pool;
//! without it they are plain iterator loops. Every helper preserves input
//! order in its output, and sums are exact, so results are bit-identical
//! either way.

use crate::poly::Polynomial;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// True when compiled with the rayon backend.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

/// Number of worker threads the helpers will use.
pub fn current_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Order-preserving map.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Maps every item to a polynomial and returns the exact sum.
pub fn map_sum<T, F>(items: &[T], f: F) -> Polynomial
where
    T: Sync,
    F: Fn(&T) -> Polynomial + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items
            .par_iter()
            .map(f)
            .reduce(Polynomial::zero, |a, b| a.add(&b))
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).fold(Polynomial::zero(), |a, b| a.add(&b))
    }
}

/// Fallible variant of [`map`]; returns the first error in input order.
pub fn try_map<T, U, E, F>(items: &[T], f: F) -> Result<Vec<U>, E>
where
    T: Sync,
    U: Send,
    E: Send,
    F: Fn(&T) -> Result<U, E> + Sync + Send,
{
    map(items, f).into_iter().collect()
}

//! Thin switch between rayon and plain iteration for the data-parallel
//! sweeps (residuals, identity checks, grid assembly). Compiled sequentially
//! when the `parallel` feature is off.

use crate::Result;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn try_map<T, R, F>(items: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Send + Sync,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn try_map<T, R, F>(items: &[T], f: F) -> Result<Vec<R>>
where
    F: Fn(&T) -> Result<R>,
{
    items.iter().map(f).collect()
}

/// Maximum of `f` over `items`; 0.0 for an empty slice.
#[cfg(feature = "parallel")]
pub(crate) fn try_max<T, F>(items: &[T], f: F) -> Result<f64>
where
    T: Sync,
    F: Fn(&T) -> Result<f64> + Send + Sync,
{
    items
        .par_iter()
        .map(f)
        .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn try_max<T, F>(items: &[T], f: F) -> Result<f64>
where
    F: Fn(&T) -> Result<f64>,
{
    items.iter().map(f).try_fold(0.0f64, |a, b| Ok(a.max(b?)))
}

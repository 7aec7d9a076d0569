//! Deterministic data-parallel reductions.
//!
//! The pairwise kernel sums are embarrassingly parallel over grid
//! nodes, but naive `par_iter().sum()` reduces partials in a
//! scheduling-dependent order, which breaks byte-identical reports.
//! Every reduction here therefore computes one partial per fixed
//! index (sequentially, in index order), collects the partials into
//! an ordered buffer, and folds that buffer sequentially. The result
//! is independent of thread count and identical to the sequential
//! fallback.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Sum `f(i)` over `i in 0..n` with per-index partials computed in
/// parallel and folded in index order.
pub fn indexed_sum<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        let partials: Vec<f64> = (0..n).into_par_iter().map(f).collect();
        partials.iter().sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).sum()
    }
}

/// Two accumulators per index, folded in index order.
pub fn indexed_sum2<F>(n: usize, f: F) -> (f64, f64)
where
    F: Fn(usize) -> (f64, f64) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        let partials: Vec<(f64, f64)> = (0..n).into_par_iter().map(f).collect();
        partials.iter().fold((0.0, 0.0), |acc, p| (acc.0 + p.0, acc.1 + p.1))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).fold((0.0, 0.0), |acc, p| (acc.0 + p.0, acc.1 + p.1))
    }
}

/// Fill `out[i] = f(i)`; each entry is owned by exactly one index.
pub fn indexed_fill<F>(out: &mut [f64], f: F)
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        out.par_iter_mut().enumerate().for_each(|(i, v)| *v = f(i));
    }
    #[cfg(not(feature = "parallel"))]
    {
        for (i, v) in out.iter_mut().enumerate() {
            *v = f(i);
        }
    }
}

/// Map `f` over `0..n` collecting results in index order.
pub fn indexed_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
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

/// Maximum of `f(i)` over `i in 0..n` (`f64::NEG_INFINITY` when empty).
pub fn indexed_max<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .map(f)
            .reduce(|| f64::NEG_INFINITY, f64::max)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).fold(f64::NEG_INFINITY, f64::max)
    }
}

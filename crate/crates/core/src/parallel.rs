//! Worker-pool control. Results never depend on the worker count.

/// Runs `f` on a dedicated pool of `workers` threads (0 means the rayon
/// default). Without the `parallel` feature this just calls `f`.
#[cfg(feature = "parallel")]
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<T: Send>(_workers: usize, f: impl FnOnce() -> T + Send) -> T {
    f()
}

/// Order-preserving map over a vector, parallel when enabled.
#[cfg(feature = "parallel")]
pub(crate) fn map_ordered<I: Send, O: Send>(items: Vec<I>, f: impl Fn(I) -> O + Sync + Send) -> Vec<O> {
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_ordered<I: Send, O: Send>(items: Vec<I>, f: impl Fn(I) -> O + Sync + Send) -> Vec<O> {
    items.into_iter().map(f).collect()
}

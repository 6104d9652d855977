//! Data-parallel map over sweep work items. With the `parallel` feature the
//! work is spread across the current rayon pool; without it the same code
//! runs sequentially. Output order always matches input order, so results do
//! not depend on the worker count.

#[cfg(feature = "parallel")]
pub fn map_collect<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential twin of [`map_collect`], kept callable in every build so
/// benches and determinism tests can compare the two paths directly.
pub fn map_collect_seq<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}

//! Execution strategy for the data-parallel kernels.
//!
//! With the `parallel` feature (on by default) the kernels split their output
//! across the rayon pool. Without it, [`Exec::Parallel`] silently runs the
//! sequential path so callers never need to `cfg` on the feature.

/// How a kernel should run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Output chunk length for parallel fills. Small enough to balance, large
/// enough that scheduling is noise.
const CHUNK: usize = 4096;

/// Fill `out` chunk by chunk. `fill(start, chunk)` writes `chunk`, whose first
/// element is `out[start]`.
pub fn fill_chunks<T, F>(out: &mut [T], exec: Exec, fill: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && out.len() > CHUNK {
        use rayon::prelude::*;
        out.par_chunks_mut(CHUNK)
            .enumerate()
            .for_each(|(i, chunk)| fill(i * CHUNK, chunk));
        return;
    }
    let _ = exec;
    for (i, chunk) in out.chunks_mut(CHUNK).enumerate() {
        fill(i * CHUNK, chunk);
    }
}

/// Map over independent work items, preserving order.
pub fn map<T, R, F>(items: Vec<T>, exec: Exec, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    let _ = exec;
    items.into_iter().map(f).collect()
}

/// Run `f` with at most `workers` threads for the parallel kernels.
pub fn with_workers<R, F>(workers: usize, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    if workers > 0 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            return pool.install(f);
        }
    }
    let _ = workers;
    f()
}

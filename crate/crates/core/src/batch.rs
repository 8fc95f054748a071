//! Batch evaluation over many independent automata.
//!
//! With the `parallel` feature (on by default) the batch functions spread
//! work over the rayon thread pool; without it they run on the calling
//! thread. The `_sequential` variants never spawn work, so both paths can be
//! compared in one build.

use crate::automaton::PtDfa;
use crate::minimize::{minimize, minimize_dfa, MinimizeStats};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Whether batch functions run on the rayon pool in this build.
pub const PARALLEL: bool = cfg!(feature = "parallel");

/// Applies `f` to every item, preserving order.
#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// `map` over `0..len`, preserving order.
#[cfg(feature = "parallel")]
pub fn map_range<U, F>(len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<U, F>(len: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..len).map(f).collect()
}

pub fn minimize_batch(dfas: &[PtDfa]) -> Vec<(PtDfa, MinimizeStats)> {
    map(dfas, minimize)
}

pub fn minimize_batch_sequential(dfas: &[PtDfa]) -> Vec<(PtDfa, MinimizeStats)> {
    dfas.iter().map(minimize).collect()
}

/// Minimal automata only, no counters.
pub fn minimize_all(dfas: &[PtDfa]) -> Vec<PtDfa> {
    map(dfas, minimize_dfa)
}

pub fn minimize_all_sequential(dfas: &[PtDfa]) -> Vec<PtDfa> {
    dfas.iter().map(minimize_dfa).collect()
}

/// Runs `f` on a pool of `jobs` threads when parallelism is compiled in and
/// `jobs > 1`; otherwise runs it directly.
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}

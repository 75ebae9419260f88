//! Dispatch of per-candidate work within one iteration.
//!
//! The engines evaluate every particle or chromosome independently, so the
//! inner loop is a plain indexed map. With the `parallel` feature (default)
//! it runs on the rayon pool; without it, or when forced, it runs in order.
//! Both paths produce identical results because all randomness is keyed per
//! lane, never drawn from a shared stream.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How the per-candidate map of one iteration is driven.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    /// Rayon thread pool when the `parallel` feature is compiled in,
    /// otherwise sequential.
    #[default]
    Auto,
    /// Single-threaded, regardless of features.
    Sequential,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        match self {
            Execution::Auto => cfg!(feature = "parallel"),
            Execution::Sequential => false,
        }
    }
}

/// Map `f` over `items` with the lane index, honoring the execution mode.
pub(crate) fn map_indexed<T, U, F>(items: &[T], exec: Execution, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(usize, &T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect();
    }
    let _ = exec;
    items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

/// Run `f` for each lane index in `0..count`.
pub(crate) fn map_lanes<U, F>(count: usize, exec: Execution, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..count).map(f).collect()
}

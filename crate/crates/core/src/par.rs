//! Data-parallel helpers.
//!
//! With the `parallel` feature, [`Exec::Parallel`] dispatches to rayon. Without
//! it every call runs sequentially. Reductions are required to be associative
//! and commutative, so results never depend on the execution mode or on the
//! number of worker threads.

/// Execution mode for the batch helpers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// `true` when this mode actually runs on a thread pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps every item and folds the results with `reduce`.
pub fn map_reduce<T, R, M, F, I>(exec: Exec, items: Vec<T>, map: M, identity: I, reduce: F) -> R
where
    T: Send,
    R: Send,
    M: Fn(T) -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(map).reduce(identity, reduce);
    }
    let _ = exec;
    items.into_iter().map(map).fold(identity(), reduce)
}

/// Maps every item, keeping input order.
pub fn map_collect<T, R, M>(exec: Exec, items: Vec<T>, map: M) -> Vec<R>
where
    T: Send,
    R: Send,
    M: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(map).collect();
    }
    let _ = exec;
    items.into_iter().map(map).collect()
}

/// Runs `f` on a pool with `jobs` workers (0 = rayon default).
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if jobs > 0 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (1..=1000).collect();
        let a = map_reduce(Exec::Sequential, items.clone(), |x| x * x, || 0, |a, b| a + b);
        let b = map_reduce(Exec::Parallel, items.clone(), |x| x * x, || 0, |a, b| a + b);
        assert_eq!(a, b);
        let c = map_collect(Exec::Parallel, items.clone(), |x| x + 1);
        assert_eq!(c, items.iter().map(|x| x + 1).collect::<Vec<_>>());
        assert_eq!(with_jobs(2, || 7), 7);
    }
}

//! Fold over an index range, data-parallel when the `parallel` feature is on
//! and more than one job is requested, sequential otherwise.
//!
//! `merge` must be associative and `init` its identity; results are then
//! independent of the worker count.

/// `jobs == 0` means "one worker per available core"; `jobs == 1` always runs
/// sequentially on the calling thread.
pub fn fold_range<A, I, F, M>(len: u64, jobs: usize, init: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, u64) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if jobs != 1 {
        use rayon::prelude::*;
        let run = || {
            (0..len)
                .into_par_iter()
                .fold(&init, &fold)
                .reduce(&init, &merge)
        };
        return match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        };
    }
    let _ = (jobs, &merge);
    (0..len).fold(init(), fold)
}

/// True when this build can run work on more than one thread.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_result_for_any_job_count() {
        let sum = |jobs| fold_range(10_000, jobs, || 0u64, |a, i| a + i * i, |a, b| a + b);
        let expect: u64 = (0..10_000u64).map(|i| i * i).sum();
        assert_eq!(sum(1), expect);
        assert_eq!(sum(4), expect);
        assert_eq!(sum(0), expect);
    }
}

//! Execution policy for the data-parallel loops (census generation, batch
//! verification). With the `parallel` feature disabled every policy runs
//! sequentially on the calling thread.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// Rayon's global pool, or a dedicated pool of `threads` workers.
    #[default]
    Parallel,
    Threads(usize),
}

impl Exec {
    pub fn from_jobs(jobs: Option<usize>) -> Self {
        match jobs {
            None => Exec::Parallel,
            Some(0) | Some(1) => Exec::Sequential,
            Some(n) => Exec::Threads(n),
        }
    }

    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "parallel") && !matches!(self, Exec::Sequential)
    }

    /// Order-preserving map over a slice.
    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            match *self {
                Exec::Sequential => items.iter().map(f).collect(),
                Exec::Parallel => items.par_iter().map(f).collect(),
                Exec::Threads(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                    Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
                    Err(_) => items.iter().map(f).collect(),
                },
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            items.iter().map(f).collect()
        }
    }

    /// Order-preserving map over an index range.
    pub fn map_range<R, F>(&self, range: std::ops::Range<u64>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            match *self {
                Exec::Sequential => range.map(f).collect(),
                Exec::Parallel => range.into_par_iter().map(f).collect(),
                Exec::Threads(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                    Ok(pool) => pool.install(|| range.clone().into_par_iter().map(&f).collect()),
                    Err(_) => range.map(f).collect(),
                },
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            range.map(f).collect()
        }
    }
}

//! Execution strategy for the data-parallel kernels.
//!
//! Every per-cell and per-interface loop in the solver goes through
//! [`Execution`]. With the `parallel` feature the `Parallel` variant runs on
//! the rayon thread pool; without it, `Parallel` falls back to the sequential
//! loop so callers never need their own `cfg` switches. Both paths produce
//! bit-identical results: kernels are pure and reductions are max/min only.

use ndarray::Array2;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Serial,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Serial
        }
    }
}

impl Execution {
    /// Whether this strategy actually runs on multiple threads in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    pub(crate) fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }

    /// Fallible map. The reported error is the one with the lowest index,
    /// whatever the thread schedule was.
    pub(crate) fn try_map<T, F>(self, n: usize, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(usize) -> Result<T> + Sync + Send,
    {
        self.map(n, f).into_iter().collect()
    }

    pub(crate) fn map2<T, F>(self, shape: (usize, usize), f: F) -> Array2<T>
    where
        T: Send,
        F: Fn(usize, usize) -> T + Sync + Send,
    {
        let (rows, cols) = shape;
        let data = self.map(rows * cols, |idx| f(idx / cols, idx % cols));
        Array2::from_shape_vec(shape, data).expect("shape matches element count")
    }

    pub(crate) fn try_map2<T, F>(self, shape: (usize, usize), f: F) -> Result<Array2<T>>
    where
        T: Send,
        F: Fn(usize, usize) -> Result<T> + Sync + Send,
    {
        let (rows, cols) = shape;
        let data = self.try_map(rows * cols, |idx| f(idx / cols, idx % cols))?;
        Ok(Array2::from_shape_vec(shape, data).expect("shape matches element count"))
    }

    /// Runs independent jobs, e.g. the resolutions of a convergence study.
    pub fn run_all<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        self.map(n, f)
    }
}

//! Case fan-out. Results always come back in case order, so parallel and
//! sequential runs are interchangeable.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map_cases<T: Send, F: Fn(u64) -> T + Send + Sync>(n: u64, f: F) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_cases<T: Send, F: Fn(u64) -> T + Send + Sync>(n: u64, f: F) -> Vec<T> {
    map_cases_seq(n, f)
}

/// Single-threaded twin of `map_cases`, kept for timing comparisons.
pub fn map_cases_seq<T, F: Fn(u64) -> T>(n: u64, f: F) -> Vec<T> {
    (0..n).map(f).collect()
}

//! Execution policy shared by the exhaustive search cores: cooperative
//! deadlines, and a data-parallel map over candidate chunks that returns
//! the same result in parallel and sequential mode.

use std::time::{Duration, Instant};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Cooperative deadline passed down into long searches. Searches poll it
/// at loop heads; a search that runs out reports timeout distinctly and
/// never returns a partial answer.
#[derive(Clone, Copy, Debug, Default)]
pub struct Deadline {
    at: Option<Instant>,
}

impl Deadline {
    pub fn none() -> Deadline {
        Deadline { at: None }
    }

    pub fn after(d: Duration) -> Deadline {
        Deadline {
            at: Some(Instant::now() + d),
        }
    }

    pub fn after_ms(ms: u64) -> Deadline {
        Deadline::after(Duration::from_millis(ms))
    }

    pub fn expired(&self) -> bool {
        matches!(self.at, Some(t) if Instant::now() >= t)
    }

    /// Remaining time, or `None` for an unbounded deadline.
    pub fn remaining(&self) -> Option<Duration> {
        self.at
            .map(|t| t.saturating_duration_since(Instant::now()))
    }

    /// A sub-deadline for a pipeline stage: `frac` of the remaining
    /// budget, never exceeding the parent deadline.
    pub fn fraction(&self, frac: f64) -> Deadline {
        match self.remaining() {
            None => Deadline::none(),
            Some(rem) => Deadline::after(rem.mul_f64(frac)),
        }
    }
}

/// Whether candidate fan-out runs on the rayon pool. Without the
/// `parallel` feature this is a no-op and everything runs sequentially.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExecMode {
    #[default]
    Sequential,
    Parallel,
}

/// Evaluates `eval` over `candidates` in chunks, returning the first
/// chunk's minimum success. Results are keyed by candidate index, so the
/// winner is the lexicographically least successful candidate regardless
/// of scheduling, and parallel and sequential runs agree exactly.
pub fn first_min_by_candidate<C, T, F>(
    candidates: &[C],
    chunk_size: usize,
    mode: ExecMode,
    eval: F,
) -> Option<(usize, T)>
where
    C: Sync,
    T: Send,
    F: Fn(usize, &C) -> Option<T> + Sync,
{
    debug_assert!(chunk_size > 0);
    for (ci, chunk) in candidates.chunks(chunk_size).enumerate() {
        let base = ci * chunk_size;
        let best = run_chunk(chunk, base, mode, &eval);
        if best.is_some() {
            return best;
        }
    }
    None
}

#[cfg(feature = "parallel")]
fn run_chunk<C, T, F>(chunk: &[C], base: usize, mode: ExecMode, eval: &F) -> Option<(usize, T)>
where
    C: Sync,
    T: Send,
    F: Fn(usize, &C) -> Option<T> + Sync,
{
    match mode {
        ExecMode::Parallel => chunk
            .par_iter()
            .enumerate()
            .filter_map(|(i, c)| eval(base + i, c).map(|t| (base + i, t)))
            .min_by_key(|(i, _)| *i),
        ExecMode::Sequential => chunk
            .iter()
            .enumerate()
            .find_map(|(i, c)| eval(base + i, c).map(|t| (base + i, t))),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_chunk<C, T, F>(chunk: &[C], base: usize, _mode: ExecMode, eval: &F) -> Option<(usize, T)>
where
    C: Sync,
    T: Send,
    F: Fn(usize, &C) -> Option<T> + Sync,
{
    chunk
        .iter()
        .enumerate()
        .find_map(|(i, c)| eval(base + i, c).map(|t| (base + i, t)))
}

//! Windowed representation counts over `(N, N + H]`.
//!
//! Both the dense per-`n` table and the streaming total enumerate the same
//! way: an outer loop over the summand with fewer bases, and for each outer
//! value an integer-root bracket of the complementary interval of length `H`.

mod engine;
pub mod oracle;

use serde::{Deserialize, Serialize};

use crate::model::ProblemConfig;
use crate::sum::NeumaierSum;
use crate::{Error, Result};

pub use engine::OUTER_CHUNK;
pub use oracle::rep_brute;

/// Largest `H` accepted by [`rep_window`].
pub const DENSE_MAX_H: u64 = 1 << 27;

/// Weighted representation counts for `n = N + 1, ..., N + H`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindowCounts {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "H")]
    pub h: u64,
    /// `values[i]` is the weight of `n = N + 1 + i`.
    pub values: Vec<f64>,
}

impl WindowCounts {
    /// Value at `m`, which must lie in `(N, N + H]`.
    pub fn at(&self, m: u64) -> f64 {
        assert!(m > self.n && m <= self.n + self.h, "{m} outside window");
        self.values[(m - self.n - 1) as usize]
    }

    pub fn total(&self) -> f64 {
        self.values.iter().copied().collect::<NeumaierSum>().value()
    }

    /// `(n, value)` pairs with a nonzero value.
    pub fn nonzero(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0.0)
            .map(move |(i, &v)| (self.n + 1 + i as u64, v))
    }
}

/// Per-`n` weights over the window.
pub fn rep_window(cfg: &ProblemConfig) -> Result<WindowCounts> {
    cfg.validate()?;
    if cfg.h > DENSE_MAX_H {
        return Err(Error::Guard(format!(
            "dense window of H = {} exceeds the limit {DENSE_MAX_H}",
            cfg.h
        )));
    }
    let plan = engine::Plan::new(cfg);
    Ok(WindowCounts {
        n: cfg.n,
        h: cfg.h,
        values: plan.dense(),
    })
}

/// Window total without materialising per-`n` values.
pub fn rep_window_total(cfg: &ProblemConfig) -> Result<f64> {
    cfg.validate()?;
    if cfg.h == 0 {
        return Ok(0.0);
    }
    Ok(engine::Plan::new(cfg).total())
}

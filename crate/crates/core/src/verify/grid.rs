use std::collections::HashSet;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::expsums::{e_turns, TrigPoly};
use crate::sum::ComplexSum;
use crate::{Error, Result};

/// Largest node count accepted.
const MAX_NODES: usize = 1 << 26;
/// Nodes per partial sum; fixes the reduction order.
const NODE_CHUNK: usize = 4096;

/// Midpoint rule with `M` nodes `alpha_j = -1/2 + (j + 1/2)/M` on the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadratureGrid {
    #[serde(rename = "M")]
    m: usize,
}

impl QuadratureGrid {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 || m > MAX_NODES {
            return Err(Error::Domain(format!("grid size must lie in [1, {MAX_NODES}], got {m}")));
        }
        Ok(QuadratureGrid { m })
    }

    /// Smallest power of two exceeding `span`.
    pub fn covering(span: u64) -> Result<Self> {
        let m = span
            .checked_add(1)
            .and_then(u64::checked_next_power_of_two)
            .filter(|&m| m <= MAX_NODES as u64)
            .ok_or_else(|| Error::Guard(format!("frequency span {span} needs more than {MAX_NODES} nodes")))?;
        Self::new(m as usize)
    }

    /// Smallest power of two `M >= min_m` on which the frequencies of `p` are
    /// pairwise distinct modulo `M`, so that the grid mean of `|p|^2` is
    /// exactly `sum c^2`.
    pub fn separating(p: &TrigPoly, min_m: usize) -> Result<Self> {
        let mut m = min_m.max(p.len()).max(1).next_power_of_two();
        loop {
            if m > MAX_NODES {
                return Err(Error::Guard(format!("no separating grid below {MAX_NODES} nodes")));
            }
            let mask = m as u64 - 1;
            let mut seen = HashSet::with_capacity(p.len());
            if p.terms.iter().all(|&(f, _)| seen.insert(f & mask)) {
                return Self::new(m);
            }
            m *= 2;
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn node(&self, j: usize) -> f64 {
        (2.0 * j as f64 + 1.0 - self.m as f64) / (2.0 * self.m as f64)
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.m).map(|j| self.node(j)).collect()
    }

    /// `2j + 1 - M` reduced modulo `2M`: the node's phase numerator over `2M`.
    fn numerator(&self, j: usize) -> u64 {
        let two_m = 2 * self.m as u64;
        (2 * j as u64 + 1 + two_m - self.m as u64) % two_m
    }

    /// `e(t / 2M)` for `t` in `[0, 2M)`.
    fn table(&self) -> Vec<Complex64> {
        let two_m = 2 * self.m;
        (0..two_m).map(|t| e_turns(t as f64 / two_m as f64)).collect()
    }

    /// `p(alpha_j)` at every node, each phase `f * alpha_j` reduced exactly.
    pub fn eval_poly(&self, p: &TrigPoly) -> Vec<Complex64> {
        let table = self.table();
        let two_m = 2 * self.m as u64;
        let reduced: Vec<(u64, f64)> = p.terms.iter().map(|&(f, c)| (f % two_m, c)).collect();
        (0..self.m)
            .into_par_iter()
            .map(|j| {
                let s = self.numerator(j) as u128;
                let mut acc = ComplexSum::new();
                for &(f, c) in &reduced {
                    let t = (f as u128 * s % two_m as u128) as usize;
                    acc.add(table[t] * c);
                }
                acc.value()
            })
            .collect()
    }

    /// `e(f * alpha_j)` at every node.
    pub fn eval_exp(&self, f: i64) -> Vec<Complex64> {
        let table = self.table();
        let two_m = 2 * self.m as i128;
        let fr = (f as i128).rem_euclid(two_m);
        (0..self.m)
            .map(|j| table[(fr * self.numerator(j) as i128 % two_m) as usize])
            .collect()
    }

    /// Rejects a declared band `[lo, hi]` containing a frequency other than
    /// `k` congruent to `k` modulo `M`.
    pub fn check_band(&self, band: (i64, i64), k: i64) -> Result<()> {
        let (lo, hi) = band;
        if lo > hi {
            return Ok(());
        }
        let m = self.m as i128;
        let (lo, hi, k) = (lo as i128, hi as i128, k as i128);
        let first = lo + (k - lo).rem_euclid(m);
        let alias = if first != k { first } else { first + m };
        if alias <= hi {
            return Err(Error::Aliasing {
                alias: alias as i64,
                target: k as i64,
                nodes: self.m,
            });
        }
        Ok(())
    }

    /// `(1/M) sum_j values[j] e(-k alpha_j)`.
    pub fn coefficient_of_values(&self, values: &[Complex64], k: i64) -> Complex64 {
        assert_eq!(values.len(), self.m, "one value per node");
        let twiddle = self.eval_exp(-k);
        let products: Vec<Complex64> = values.iter().zip(&twiddle).map(|(v, t)| v * t).collect();
        ordered_sum(&products) / self.m as f64
    }

    /// `(1/M) sum_j g(j)` with partial sums over fixed chunks.
    pub(crate) fn node_mean(&self, g: impl Fn(usize) -> Complex64 + Sync) -> Complex64 {
        let chunks = self.m.div_ceil(NODE_CHUNK);
        let partial: Vec<Complex64> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let end = ((c + 1) * NODE_CHUNK).min(self.m);
                (c * NODE_CHUNK..end).map(&g).collect::<ComplexSum>().value()
            })
            .collect();
        partial.into_iter().collect::<ComplexSum>().value() / self.m as f64
    }
}

fn ordered_sum(xs: &[Complex64]) -> Complex64 {
    let partial: Vec<Complex64> = xs
        .par_chunks(NODE_CHUNK)
        .map(|c| c.iter().copied().collect::<ComplexSum>().value())
        .collect();
    partial.into_iter().collect::<ComplexSum>().value()
}

/// Coefficient of `e(k alpha)` in a trigonometric polynomial known to have
/// all frequencies in `band`, by the midpoint rule on `grid`.
pub fn fourier_coeff_on_grid<F>(evaluate: F, band: (i64, i64), k: i64, grid: &QuadratureGrid) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64 + Sync,
{
    grid.check_band(band, k)?;
    let values: Vec<Complex64> = (0..grid.m()).into_par_iter().map(|j| evaluate(grid.node(j))).collect();
    Ok(grid.coefficient_of_values(&values, k))
}

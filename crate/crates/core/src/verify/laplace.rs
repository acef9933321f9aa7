use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::grid::QuadratureGrid;
use super::LemmaReport;
use crate::expsums::{e_turns, turns_frac};
use crate::model::gamma_fn;
use crate::{Error, Result};

pub const LAPLACE_MIN_NODES: usize = 1 << 14;
const MAX_NODES: usize = 1 << 24;
const AGREEMENT: f64 = 1e-9;
const SCALED_BOUND: f64 = 10.0;

/// One `n` of a Laplace check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaplaceDetail {
    pub n: u64,
    pub numeric: Complex64,
    pub reference: f64,
    pub residual: f64,
    /// `n * residual`.
    pub scaled: f64,
    /// Nodes of the finest midpoint rule used.
    pub nodes: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LaplaceCheck {
    pub report: LemmaReport,
    pub details: Vec<LaplaceDetail>,
}

/// `int_{-1/2}^{1/2} z^(-mu) e(-n alpha) d alpha` with `z = 1/N - 2 pi i alpha`,
/// by Romberg extrapolation over midpoint rules with `m0, 2 m0, 4 m0, ...`
/// nodes until successive diagonal entries agree to `1e-9`.
pub fn laplace_integral(big_n: u64, mu: f64, n: u64, m0: usize) -> Result<(Complex64, usize)> {
    if big_n == 0 || n == 0 || !(mu > 0.0) {
        return Err(Error::Domain(format!("need N, n >= 1 and mu > 0 (N = {big_n}, n = {n}, mu = {mu})")));
    }
    if m0 < LAPLACE_MIN_NODES {
        return Err(Error::Domain(format!("at least {LAPLACE_MIN_NODES} nodes required, got {m0}")));
    }
    let inv_n = 1.0 / big_n as f64;
    let midpoint = |m: usize| -> Result<Complex64> {
        let grid = QuadratureGrid::new(m)?;
        Ok(grid.node_mean(|j| {
            let alpha = grid.node(j);
            let z = Complex64::new(inv_n, -2.0 * PI * alpha);
            z.powf(-mu) * e_turns(-turns_frac(n, alpha))
        }))
    };
    let mut prev: Vec<Complex64> = Vec::new();
    let mut m = m0;
    loop {
        let mut row = vec![midpoint(m)?];
        let mut factor = 1.0;
        for i in 1..=prev.len() {
            factor *= 4.0;
            let r = row[i - 1] + (row[i - 1] - prev[i - 1]) / (factor - 1.0);
            row.push(r);
        }
        if row.len() >= 3 {
            let k = row.len() - 1;
            if (row[k] - prev[k - 1]).norm() <= AGREEMENT {
                return Ok((row[k], m));
            }
        }
        prev = row;
        m = m
            .checked_mul(2)
            .filter(|&m| m <= MAX_NODES)
            .ok_or_else(|| Error::NonConvergent(format!("Laplace integral at n = {n}, mu = {mu} not settled by {MAX_NODES} nodes")))?;
    }
}

/// Scaled residuals `n |integral - exp(-n/N) n^(mu-1) / Gamma(mu)|`;
/// passes when all are at most 10.
pub fn laplace_check(big_n: u64, mu: f64, n_list: &[u64], m0: usize) -> Result<LaplaceCheck> {
    let g = gamma_fn(mu)?;
    let mut details = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let (numeric, nodes) = laplace_integral(big_n, mu, n, m0)?;
        let nf = n as f64;
        let reference = (-nf / big_n as f64).exp() * nf.powf(mu - 1.0) / g;
        let residual = (numeric - reference).norm();
        details.push(LaplaceDetail {
            n,
            numeric,
            reference,
            residual,
            scaled: nf * residual,
            nodes,
        });
    }
    let worst = details.iter().map(|d| d.scaled).fold(0.0, f64::max);
    let max_im = details.iter().map(|d| d.numeric.im.abs()).fold(0.0, f64::max);
    let report = LemmaReport::upper_bound(format!("laplace mu={mu} N={big_n}"), worst, SCALED_BOUND, 0.0)
        .with_note(format!("max scaled residual over {} values of n, max |Im| {max_im:.2e}", details.len()));
    Ok(LaplaceCheck { report, details })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_one_reference() {
        let c = laplace_check(1000, 1.0, &[1000], LAPLACE_MIN_NODES).unwrap();
        let d = c.details[0];
        assert!((d.reference - (-1f64).exp()).abs() < 1e-15);
        assert!(d.scaled <= 10.0);
        assert!(d.numeric.im.abs() < 1e-12);
    }

    #[test]
    fn mu_half_reference() {
        let c = laplace_check(100, 0.5, &[200], LAPLACE_MIN_NODES).unwrap();
        assert!((c.details[0].reference - 0.005_399_096_651_318_8).abs() < 1e-15);
        assert!(c.report.passed(), "{}", c.report);
    }

    #[test]
    fn bad_arguments() {
        assert!(laplace_integral(100, 0.0, 1, LAPLACE_MIN_NODES).is_err());
        assert!(laplace_integral(100, 1.0, 1, 1024).is_err());
    }
}

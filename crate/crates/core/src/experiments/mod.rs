//! Convergence sweeps over `(N, theta)` with `H = floor(N^theta)`: observed
//! window totals against the predicted main term, slope fits of the error,
//! and CSV/JSON output.

mod emit;
mod fit;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::model::{admissible_h_range, cutoff_a, main_term, MainTermForm, ProblemConfig, Theorem, Variant, DEFAULT_EPSILON};
use crate::repcount::rep_window_total;
use crate::{Error, Result};

pub use emit::{read_table_json, table_to_csv, write_reports_json, write_table_csv, write_table_json, CSV_HEADER};
pub use fit::{fit_error_exponent, fit_groups, ExponentFit};

fn default_epsilon() -> f64 {
    DEFAULT_EPSILON
}

fn one() -> f64 {
    1.0
}

/// What to sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub variant: Variant,
    pub ell_pairs: Vec<(u32, u32)>,
    #[serde(rename = "N_list")]
    pub n_list: Vec<u64>,
    pub theta_list: Vec<f64>,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    /// Theorem whose range labels the rows; defaults by variant.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<Theorem>,
    /// Constant in front of threshold-type lower ends.
    #[serde(default = "one")]
    pub kappa: f64,
    #[serde(default)]
    pub damped: bool,
    /// `d` in the cutoff `A(N, d)` of the truncated variants.
    #[serde(default = "one")]
    pub cutoff_d: f64,
}

impl SweepSpec {
    pub fn new(variant: Variant, ell_pairs: Vec<(u32, u32)>, n_list: Vec<u64>, theta_list: Vec<f64>) -> Self {
        SweepSpec {
            variant,
            ell_pairs,
            n_list,
            theta_list,
            epsilon: DEFAULT_EPSILON,
            theorem: None,
            kappa: 1.0,
            damped: false,
            cutoff_d: 1.0,
        }
    }

    pub fn theorem(&self) -> Theorem {
        self.theorem.unwrap_or(match self.variant {
            Variant::RppTruncated => Theorem::T1,
            Variant::RpTruncated => Theorem::T3,
            Variant::RppFull => Theorem::T2,
            Variant::RpFull => Theorem::T4,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub ell1: u32,
    pub ell2: u32,
    pub variant: Variant,
    #[serde(rename = "N")]
    pub n: u64,
    pub theta: f64,
    #[serde(rename = "H")]
    pub h: u64,
    pub observed: f64,
    pub predicted: f64,
    pub ratio: f64,
    pub in_range: bool,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepMeta {
    pub spec: SweepSpec,
    pub theorem: Theorem,
    pub version: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub meta: SweepMeta,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// Copy with every `wall_ms` set to 0, for byte comparisons.
    pub fn without_timing(&self) -> SweepTable {
        let mut t = self.clone();
        for r in &mut t.rows {
            r.wall_ms = 0;
        }
        t
    }
}

/// `floor(N^theta)`, snapping to the nearest integer when the power lands
/// within rounding of it.
pub fn window_length(n: u64, theta: f64) -> Result<u64> {
    if !(theta > 0.0 && theta <= 1.0) {
        return Err(Error::Domain(format!("theta must lie in (0, 1], got {theta}")));
    }
    let x = (n as f64).powf(theta);
    let r = x.round();
    let h = if (x - r).abs() <= 1e-9 * x { r } else { x.floor() };
    Ok(h as u64)
}

/// The problem a row evaluates.
pub fn row_config(spec: &SweepSpec, ell1: u32, ell2: u32, n: u64, theta: f64) -> Result<ProblemConfig> {
    let h = window_length(n, theta)?;
    let mut cfg = ProblemConfig::full(spec.variant, ell1, ell2, n, h).with_damping(spec.damped);
    if spec.variant.is_truncated() {
        cfg = cfg.with_cutoff(cutoff_a(n, spec.cutoff_d)?);
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run_row(spec: &SweepSpec, theorem: Theorem, ell1: u32, ell2: u32, n: u64, theta: f64) -> Result<SweepRow> {
    let cfg = row_config(spec, ell1, ell2, n, theta)?;
    let start = Instant::now();
    let observed = rep_window_total(&cfg)?;
    let wall_ms = start.elapsed().as_millis() as u64;
    let predicted = main_term(&cfg, MainTermForm::Collapsed);
    let in_range = admissible_h_range(theorem, ell1, ell2, n, spec.epsilon)
        .map(|r| r.contains(cfg.h, spec.kappa))
        .unwrap_or(false);
    Ok(SweepRow {
        ell1,
        ell2,
        variant: spec.variant,
        n,
        theta,
        h: cfg.h,
        observed,
        predicted,
        ratio: if predicted > 0.0 { observed / predicted } else { f64::NAN },
        in_range,
        wall_ms,
    })
}

/// One row per `(pair, N, theta)`, sorted by `(l1, l2, N, theta)`.
pub fn sweep(spec: &SweepSpec) -> Result<SweepTable> {
    let theorem = spec.theorem();
    let mut jobs = Vec::new();
    for &(l1, l2) in &spec.ell_pairs {
        for &n in &spec.n_list {
            for &t in &spec.theta_list {
                jobs.push((l1, l2, n, t));
            }
        }
    }
    let mut rows = jobs
        .into_par_iter()
        .map(|(l1, l2, n, t)| run_row(spec, theorem, l1, l2, n, t))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| {
        (a.ell1, a.ell2, a.n)
            .cmp(&(b.ell1, b.ell2, b.n))
            .then(a.theta.total_cmp(&b.theta))
    });
    Ok(SweepTable {
        meta: SweepMeta {
            spec: spec.clone(),
            theorem,
            version: env!("CARGO_PKG_VERSION").to_string(),
            note: "rows are deterministic; wall_ms is timing only".into(),
        },
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcount::rep_brute;

    #[test]
    fn window_lengths() {
        assert_eq!(window_length(10_000, 0.5).unwrap(), 100);
        assert_eq!(window_length(100_000_000, 0.9).unwrap(), 15_848_931);
        assert_eq!(window_length(1000, 1.0).unwrap(), 1000);
        assert!(window_length(1000, 0.0).is_err());
    }

    #[test]
    fn predicted_is_quarter_pi_h_for_squares() {
        let spec = SweepSpec::new(Variant::RppFull, vec![(2, 2)], vec![10_000], vec![0.5]);
        let t = sweep(&spec).unwrap();
        let r = &t.rows[0];
        assert_eq!(r.h, 100);
        assert!((r.predicted - std::f64::consts::FRAC_PI_4 * 100.0).abs() < 1e-12);
    }

    #[test]
    fn observed_matches_oracle() {
        let spec = SweepSpec::new(Variant::RppFull, vec![(2, 3)], vec![10_000], vec![0.7]);
        let t = sweep(&spec).unwrap();
        let r = &t.rows[0];
        let brute: f64 = (r.n + 1..=r.n + r.h)
            .map(|m| rep_brute(m, Variant::RppFull, 2, 3, f64::INFINITY, false, r.n).unwrap())
            .sum();
        assert!((r.observed - brute).abs() <= 1e-9 * brute);
    }

    #[test]
    fn rows_sorted_and_labelled() {
        let spec = SweepSpec::new(Variant::RpFull, vec![(3, 2), (2, 2)], vec![20_000, 5_000], vec![0.9, 0.6]);
        let t = sweep(&spec).unwrap();
        assert_eq!(t.meta.theorem, Theorem::T4);
        let keys: Vec<_> = t.rows.iter().map(|r| (r.ell1, r.ell2, r.n, r.theta.to_bits())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(t.rows.len(), 8);
    }

    #[test]
    fn truncated_rows_use_cutoff() {
        let spec = SweepSpec::new(Variant::RppTruncated, vec![(2, 3)], vec![100_000], vec![0.8]);
        let t = sweep(&spec).unwrap();
        assert!(t.rows[0].observed > 0.0);
        assert!(t.rows[0].observed < t.rows[0].predicted);
    }
}

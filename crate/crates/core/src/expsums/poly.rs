use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::freq::{e_turns, turns_frac};
use crate::sum::{ComplexSum, NeumaierSum};

/// `sum_k c_k e(f_k alpha)` with nonnegative integer frequencies and real
/// coefficients.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TrigPoly {
    pub terms: Vec<(u64, f64)>,
}

impl TrigPoly {
    pub fn new(terms: Vec<(u64, f64)>) -> Self {
        TrigPoly { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, alpha: f64) -> Complex64 {
        let mut acc = ComplexSum::new();
        for &(f, c) in &self.terms {
            acc.add(e_turns(turns_frac(f, alpha)) * c);
        }
        acc.value()
    }

    pub fn eval_many(&self, alphas: &[f64]) -> Vec<Complex64> {
        alphas.par_iter().map(|&a| self.eval(a)).collect()
    }

    /// `(min, max)` frequency, `None` when empty.
    pub fn band(&self) -> Option<(u64, u64)> {
        let lo = self.terms.iter().map(|t| t.0).min()?;
        let hi = self.terms.iter().map(|t| t.0).max()?;
        Some((lo, hi))
    }

    /// Value at `alpha = 0`: the sum of coefficients.
    pub fn at_zero(&self) -> f64 {
        self.terms.iter().map(|t| t.1).collect::<NeumaierSum>().value()
    }

    /// `sum c_k^2`, the mean square over the circle when frequencies are distinct.
    pub fn sum_sq(&self) -> f64 {
        self.terms.iter().map(|t| t.1 * t.1).collect::<NeumaierSum>().value()
    }

    /// Exact `int_{-xi}^{xi} |P(alpha)|^2 d alpha` via the kernel
    /// `sin(2 pi d xi) / (pi d)` over all frequency differences `d`.
    pub fn mean_square_on(&self, xi: f64) -> f64 {
        let t = &self.terms;
        let rows: Vec<f64> = (0..t.len())
            .into_par_iter()
            .map(|i| {
                let (fi, ci) = t[i];
                let mut acc = NeumaierSum::new();
                acc.add(ci * ci * 2.0 * xi);
                for &(fj, cj) in &t[i + 1..] {
                    let d = fi.abs_diff(fj);
                    let kernel = if d == 0 {
                        2.0 * xi
                    } else {
                        // sin(2 pi d xi) with the phase reduced exactly
                        e_turns(turns_frac(d, xi)).im / (std::f64::consts::PI * d as f64)
                    };
                    acc.add(2.0 * ci * cj * kernel);
                }
                acc.value()
            })
            .collect();
        rows.into_iter().collect::<NeumaierSum>().value()
    }
}

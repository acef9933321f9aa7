use serde::{Deserialize, Serialize};

use super::freq::Frequency;
use super::poly::TrigPoly;
use super::{ExpSumKind, ExpSumSample};
use crate::arith::{integer_kth_root, integer_kth_root_ceil, mangoldt_weights};
use crate::{Error, Result};

/// Support parameters of the finite sums.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicalParams {
    #[serde(rename = "N")]
    pub n: u64,
    /// Lower cutoff `N/A`; `f64::INFINITY` means the sums start at 1.
    #[serde(rename = "A")]
    pub a: f64,
    /// Length of `U`.
    #[serde(rename = "H")]
    pub h: u64,
}

impl ClassicalParams {
    pub fn new(n: u64, a: f64, h: u64) -> Self {
        ClassicalParams { n, a, h }
    }

    /// Smallest admissible value `ceil(N/A)`, at least 1.
    fn lower_value(&self) -> u64 {
        if self.a.is_infinite() {
            1
        } else {
            (self.n as f64 / self.a).ceil().max(1.0) as u64
        }
    }
}

/// The finite sum `kind` as a trigonometric polynomial.
pub fn classical_poly(kind: ExpSumKind, ell: u32, p: &ClassicalParams) -> Result<TrigPoly> {
    if !(p.a > 1.0) {
        return Err(Error::Domain(format!("cutoff A must exceed 1, got {}", p.a)));
    }
    if ell == 0 {
        return Err(Error::Domain("exponent must be positive".into()));
    }
    let lo_val = p.lower_value();
    let (m_lo, m_hi) = (integer_kth_root_ceil(lo_val, ell), integer_kth_root(p.n, ell));
    let pow = |m: u64| m.pow(ell);
    let terms = match kind {
        ExpSumKind::S | ExpSumKind::V => mangoldt_weights(m_lo, m_hi, kind == ExpSumKind::V)
            .into_iter()
            .map(|e| (pow(e.m), e.weight))
            .collect(),
        ExpSumKind::T => (m_lo.max(1)..=m_hi).map(|m| (pow(m), 1.0)).collect(),
        ExpSumKind::F => {
            let l = ell as f64;
            (lo_val..=p.n)
                .map(|m| (m, (m as f64).powf(1.0 / l - 1.0) / l))
                .collect()
        }
        ExpSumKind::U => (1..=p.h).map(|m| (m, 1.0)).collect(),
        _ => {
            return Err(Error::Domain(format!("{kind} is not a finite sum; use damped_sum")));
        }
    };
    Ok(TrigPoly::new(terms))
}

pub fn classical_sum(kind: ExpSumKind, ell: u32, freq: &Frequency, p: &ClassicalParams) -> Result<ExpSumSample> {
    let poly = classical_poly(kind, ell, p)?;
    Ok(ExpSumSample {
        kind,
        ell,
        alpha: freq.alpha,
        value: poly.eval(freq.alpha),
        truncation_bound: 0.0,
    })
}

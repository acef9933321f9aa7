use num_complex::Complex64;

use super::freq::Frequency;
use super::poly::TrigPoly;
use super::{ExpSumKind, ExpSumSample};
use crate::arith::{integer_kth_root, mangoldt_weights};
use crate::model::gamma_fn;
use crate::{Error, Result};

pub const DEFAULT_DAMPED_TOL: f64 = 1e-16;

/// Tail mass allowed regardless of the requested tolerance.
const MAX_TAIL: f64 = 1e-15;

/// A truncated damped sum with a bound on what was left out.
#[derive(Debug, Clone, PartialEq)]
pub struct DampedPoly {
    pub poly: TrigPoly,
    /// Largest base kept.
    pub m_max: u64,
    pub tail_bound: f64,
}

/// Bound on `sum_{m > m_max} w(m) exp(-m^l/N)` with `w(m) = log m`
/// (`log_weights`) or 1.
fn tail_bound(m_max: u64, ell: u32, n: u64, log_weights: bool) -> f64 {
    let m1 = (m_max + 1) as f64;
    let nf = n as f64;
    let first = (-m1.powi(ell as i32) / nf).exp();
    if first == 0.0 {
        return 0.0;
    }
    // consecutive exponents grow by at least l (M+1)^(l-1)
    let step = ell as f64 * m1.powi(ell as i32 - 1) / nf;
    let one_minus_r = -(-step).exp_m1();
    let r = 1.0 - one_minus_r;
    if log_weights {
        first * (m1.ln() / one_minus_r + r / (m1 * one_minus_r * one_minus_r))
    } else {
        first / one_minus_r
    }
}

/// Truncation of a damped sum with tail mass at most `min(tol, 1e-15)`.
pub fn damped_poly(kind: ExpSumKind, ell: u32, n: u64, tol: f64) -> Result<DampedPoly> {
    if !(tol > 0.0 && tol <= 1e-6) {
        return Err(Error::Domain(format!("tolerance must lie in (0, 1e-6], got {tol}")));
    }
    if ell == 0 || n == 0 {
        return Err(Error::Domain("need l >= 1 and N >= 1".into()));
    }
    let target = tol.min(MAX_TAIL);
    let log_weights = kind != ExpSumKind::Omega;
    let mut k = -target.ln();
    let (m_max, bound) = loop {
        let cap = k * n as f64;
        if cap >= u64::MAX as f64 / 2.0 {
            return Err(Error::Overflow(format!("damped sum support exceeds u64 at N = {n}")));
        }
        let m_max = integer_kth_root(cap as u64, ell);
        let bound = tail_bound(m_max, ell, n, log_weights);
        if bound <= target {
            break (m_max, bound);
        }
        k += 2.0;
    };
    let nf = n as f64;
    let damp = |m: u64| (-((m.pow(ell)) as f64) / nf).exp();
    let terms: Vec<(u64, f64)> = match kind {
        ExpSumKind::Stilde | ExpSumKind::Vtilde => {
            mangoldt_weights(1, m_max, kind == ExpSumKind::Vtilde)
                .into_iter()
                .map(|e| (e.m.pow(ell), e.weight * damp(e.m)))
                .collect()
        }
        ExpSumKind::Omega => (1..=m_max).map(|m| (m.pow(ell), damp(m))).collect(),
        _ => return Err(Error::Domain(format!("{kind} is not a damped sum"))),
    };
    Ok(DampedPoly {
        poly: TrigPoly::new(terms),
        m_max,
        tail_bound: bound,
    })
}

pub fn damped_sum(kind: ExpSumKind, ell: u32, freq: &Frequency, tol: f64) -> Result<ExpSumSample> {
    let d = damped_poly(kind, ell, freq.n, tol)?;
    Ok(ExpSumSample {
        kind,
        ell,
        alpha: freq.alpha,
        value: d.poly.eval(freq.alpha),
        truncation_bound: d.tail_bound,
    })
}

/// `Stilde_l(alpha) - Gamma(1/l) / (l z^(1/l))`.
pub fn tilde_error(ell: u32, freq: &Frequency, tol: f64) -> Result<Complex64> {
    let s = damped_sum(ExpSumKind::Stilde, ell, freq, tol)?.value;
    let l = ell as f64;
    let main = freq.z.powf(-1.0 / l) * (gamma_fn(1.0 / l)? / l);
    Ok(s - main)
}

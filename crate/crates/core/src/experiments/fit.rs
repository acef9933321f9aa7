use serde::{Deserialize, Serialize};

use super::{SweepRow, SweepTable};
use crate::{Error, Result};

/// Least-squares slope of `log |observed - predicted|` against `log N`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExponentFit {
    pub slope: f64,
    pub stderr: f64,
    pub points: usize,
}

pub fn fit_error_exponent(rows: &[SweepRow]) -> Result<ExponentFit> {
    if rows.len() < 3 {
        return Err(Error::InsufficientRows(rows.len()));
    }
    let key = (rows[0].ell1, rows[0].ell2, rows[0].theta.to_bits());
    if rows.iter().any(|r| (r.ell1, r.ell2, r.theta.to_bits()) != key) {
        return Err(Error::Degenerate("rows mix exponent pairs or theta".into()));
    }
    let mut pts = Vec::with_capacity(rows.len());
    for r in rows {
        let err = (r.observed - r.predicted).abs();
        if !(r.predicted > 0.0) || err == 0.0 || !err.is_finite() {
            return Err(Error::Degenerate(format!("no error to fit at N = {}", r.n)));
        }
        pts.push(((r.n as f64).ln(), err.ln()));
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InsufficientRows(1));
    }
    let slope = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>() / sxx;
    let intercept = my - slope * mx;
    let ssr: f64 = pts.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    let stderr = if pts.len() > 2 { (ssr / (k - 2.0) / sxx).sqrt() } else { f64::NAN };
    Ok(ExponentFit {
        slope,
        stderr,
        points: pts.len(),
    })
}

/// One fit per `(l1, l2, theta)` group of the table, in table order.
pub fn fit_groups(table: &SweepTable) -> Vec<((u32, u32, f64), Result<ExponentFit>)> {
    let mut keys: Vec<(u32, u32, f64)> = Vec::new();
    for r in &table.rows {
        let k = (r.ell1, r.ell2, r.theta);
        if !keys.iter().any(|q| q.0 == k.0 && q.1 == k.1 && q.2.to_bits() == k.2.to_bits()) {
            keys.push(k);
        }
    }
    keys.into_iter()
        .map(|k| {
            let rows: Vec<SweepRow> = table
                .rows
                .iter()
                .filter(|r| (r.ell1, r.ell2, r.theta.to_bits()) == (k.0, k.1, k.2.to_bits()))
                .cloned()
                .collect();
            (k, fit_error_exponent(&rows))
        })
        .collect()
}

use rayon::prelude::*;

use super::LemmaReport;
use crate::expsums::{damped_poly, theta_jmax_for, theta_main_approx, ExpSumKind, Frequency, DEFAULT_DAMPED_TOL, DEFAULT_JMAX};
use crate::{Error, Result};

/// `count` equally spaced points of `[-1/2, 1/2]`, both ends included.
pub fn theta_grid(count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..count)
            .map(|i| (2 * i as i64 - (count as i64 - 1)) as f64 / (2.0 * (count - 1) as f64))
            .collect(),
    }
}

/// Largest `|omega_2(alpha) - theta side| / (1 + |z|^(-1/2))` over `alphas`.
///
/// The `j`-series is summed to `max(8, j)` terms with `j` the first index
/// whose tail bound is below `tol / 100`.
pub fn theta_modular_check(n: u64, alphas: &[f64], tol: f64) -> Result<LemmaReport> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let omega = damped_poly(ExpSumKind::Omega, 2, n, DEFAULT_DAMPED_TOL)?;
    let rows: Vec<(f64, u32)> = alphas
        .par_iter()
        .map(|&alpha| -> Result<(f64, u32)> {
            let fr = Frequency::new(alpha, n)?;
            let j_max = theta_jmax_for(&fr, tol / 100.0).max(DEFAULT_JMAX);
            let theta = theta_main_approx(&fr, j_max);
            let scale = 1.0 + fr.z.norm().powf(-0.5);
            Ok(((omega.poly.eval(alpha) - theta.value).norm() / scale, j_max))
        })
        .collect::<Result<_>>()?;
    let worst = rows.iter().map(|r| r.0).fold(0.0, f64::max);
    let j_top = rows.iter().map(|r| r.1).max().unwrap_or(DEFAULT_JMAX);
    Ok(LemmaReport::upper_bound(format!("theta modular relation N={n}"), worst, tol, 0.0).with_note(format!(
        "{} points, j up to {j_top}, omega tail <= {:.1e}",
        alphas.len(),
        omega.tail_bound
    )))
}

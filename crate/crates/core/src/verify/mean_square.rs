use num_complex::Complex64;
use rayon::prelude::*;

use super::grid::QuadratureGrid;
use super::LemmaReport;
use crate::expsums::{classical_poly, damped_poly, ClassicalParams, ExpSumKind, Frequency, TrigPoly, DEFAULT_DAMPED_TOL};
use crate::model::gamma_fn;
use crate::sum::ComplexSum;
use crate::{Error, Result};

pub const MEAN_SQUARE_MAX_N: u64 = 100_000;
const FULL_CIRCLE_TOL: f64 = 1e-10;

/// `int_{-xi}^{xi} |P|^2` for `T, S, V, Omega, Stilde` against the shapes
/// `xi N^(1/l) (+ L)` and `xi N^(1/l) L (+ L^2)` (report-only), the full-circle
/// values against `sum c^2` (asserted), `int |U|^mu` for `mu = 1, 2` with
/// `H = floor(sqrt N)`, and the local mean square of
/// `Stilde - Gamma(1/l) / (l z^(1/l))` (report-only).
pub fn mean_square_report(ell: u32, n: u64, xi_list: &[f64]) -> Result<Vec<LemmaReport>> {
    if ell < 2 {
        return Err(Error::Domain(format!("mean-square report needs l >= 2, got {ell}")));
    }
    if !(3..=MEAN_SQUARE_MAX_N).contains(&n) {
        return Err(Error::Guard(format!("mean-square report needs 3 <= N <= {MEAN_SQUARE_MAX_N}, got {n}")));
    }
    if let Some(bad) = xi_list.iter().find(|&&x| !(x > 0.0 && x <= 0.5)) {
        return Err(Error::Domain(format!("xi = {bad} outside (0, 1/2]")));
    }
    let nf = n as f64;
    let l = nf.ln();
    let root = nf.powf(1.0 / ell as f64);
    let params = ClassicalParams::new(n, f64::INFINITY, 0);
    let stilde = damped_poly(ExpSumKind::Stilde, ell, n, DEFAULT_DAMPED_TOL)?;
    let sums: Vec<(ExpSumKind, TrigPoly, bool)> = vec![
        (ExpSumKind::T, classical_poly(ExpSumKind::T, ell, &params)?, false),
        (ExpSumKind::S, classical_poly(ExpSumKind::S, ell, &params)?, true),
        (ExpSumKind::V, classical_poly(ExpSumKind::V, ell, &params)?, true),
        (ExpSumKind::Omega, damped_poly(ExpSumKind::Omega, ell, n, DEFAULT_DAMPED_TOL)?.poly, false),
        (ExpSumKind::Stilde, stilde.poly.clone(), true),
    ];

    let mut out = Vec::new();
    for &xi in xi_list {
        for (kind, p, logged) in &sums {
            let shape = if *logged {
                xi * root * l + if ell == 2 { l * l } else { 1.0 }
            } else {
                xi * root + if ell == 2 { l } else { 1.0 }
            };
            out.push(LemmaReport::report_only(
                format!("int_-xi^xi |{kind}|^2 / shape l={ell} xi={xi}"),
                p.mean_square_on(xi),
                shape,
            ));
        }
    }
    for (kind, p, _) in &sums {
        let grid = QuadratureGrid::separating(p, 1)?;
        let values = grid.eval_poly(p);
        let quad = grid.node_mean(|j| values[j].norm_sqr().into()).re;
        out.push(
            LemmaReport::identity(format!("full circle |{kind}|^2 l={ell}"), quad, p.sum_sq(), FULL_CIRCLE_TOL)
                .with_note(format!("M = {}", grid.m())),
        );
    }

    let h = ((nf.sqrt().floor()) as u64).max(2);
    let u = TrigPoly::new((1..=h).map(|m| (m, 1.0)).collect());
    let grid = QuadratureGrid::new((64 * h as usize).next_power_of_two())?;
    let values = grid.eval_poly(&u);
    for (mu, shape) in [(1.0f64, (h as f64).ln()), (2.0, h as f64)] {
        let integral = grid.node_mean(|j| values[j].norm().powf(mu).into()).re;
        out.push(LemmaReport::report_only(format!("int |U|^{mu} / shape H={h}"), integral, shape));
    }

    let g = gamma_fn(1.0 / ell as f64)? / ell as f64;
    for &xi in xi_list {
        let k = ((16.0 * xi * nf).ceil() as usize).clamp(1024, 1 << 16);
        let width = 2.0 * xi / k as f64;
        let values: Vec<f64> = (0..k)
            .into_par_iter()
            .map(|j| -> Result<f64> {
                let alpha = -xi + (j as f64 + 0.5) * width;
                let fr = Frequency::new(alpha, n)?;
                let main: Complex64 = fr.z.powf(-1.0 / ell as f64) * g;
                Ok((stilde.poly.eval(alpha) - main).norm_sqr())
            })
            .collect::<Result<_>>()?;
        let integral = values.iter().map(|&v| Complex64::from(v)).collect::<ComplexSum>().value().re * width;
        out.push(
            LemmaReport::report_only(
                format!("int_-xi^xi |Stilde - main|^2 / N^(1/l) xi L^2 l={ell} xi={xi}"),
                integral,
                root * xi * l * l,
            )
            .with_note(format!("{k} midpoint nodes")),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Verdict;

    #[test]
    fn full_circle_assertions_pass() {
        let reports = mean_square_report(2, 100, &[0.01, 0.5]).unwrap();
        let asserted: Vec<_> = reports.iter().filter(|r| r.verdict != Verdict::ReportOnly).collect();
        assert_eq!(asserted.len(), 5);
        assert!(asserted.iter().all(|r| r.verdict == Verdict::Pass));
        let v = reports.iter().find(|r| r.name.starts_with("full circle |V|^2")).unwrap();
        let want: f64 = [2f64, 3.0, 5.0, 7.0].iter().map(|p| p.ln().powi(2)).sum();
        assert!((want - 8.064_258_676_907_489).abs() < 1e-12);
        assert!((v.reference - want).abs() < 1e-13);
        let t = reports.iter().find(|r| r.name.starts_with("full circle |T|^2")).unwrap();
        assert_eq!(t.reference, 10.0);
    }

    #[test]
    fn u_square_is_h() {
        let reports = mean_square_report(3, 400, &[0.25]).unwrap();
        let u2 = reports.iter().find(|r| r.name.starts_with("int |U|^2")).unwrap();
        assert!((u2.observed - 20.0).abs() < 1e-10);
    }

    #[test]
    fn half_circle_kernel_equals_sum_sq() {
        let reports = mean_square_report(2, 1000, &[0.5]).unwrap();
        let local = reports.iter().find(|r| r.name.starts_with("int_-xi^xi |S|^2")).unwrap();
        let full = reports.iter().find(|r| r.name.starts_with("full circle |S|^2")).unwrap();
        assert!((local.observed - full.reference).abs() < 1e-9 * full.reference);
    }

    #[test]
    fn rejects_bad_xi() {
        assert!(mean_square_report(2, 100, &[0.0]).is_err());
        assert!(mean_square_report(2, 100, &[0.6]).is_err());
    }
}

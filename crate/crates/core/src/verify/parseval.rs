use super::grid::QuadratureGrid;
use super::LemmaReport;
use crate::expsums::{classical_poly, ClassicalParams, ExpSumKind};
use crate::sum::neumaier;
use crate::{Error, Result};

pub const PARSEVAL_MAX_N: u64 = 100_000;
const TOLERANCE: f64 = 1e-10;

/// Grid quadrature of `int |f_l|^2` against `(1/l^2) sum_{N/A <= m <= N} m^(2/l - 2)`.
pub fn parseval_check(ell: u32, n: u64, a: f64) -> Result<LemmaReport> {
    if n > PARSEVAL_MAX_N {
        return Err(Error::Guard(format!("Parseval check needs N <= {PARSEVAL_MAX_N}, got {n}")));
    }
    let f = classical_poly(ExpSumKind::F, ell, &ClassicalParams::new(n, a, 0))?;
    let grid = QuadratureGrid::separating(&f, 1)?;
    let values = grid.eval_poly(&f);
    let quadrature = grid.node_mean(|j| values[j].norm_sqr().into()).re;

    let l = ell as f64;
    let lo = if a.is_infinite() { 1 } else { (n as f64 / a).ceil().max(1.0) as u64 };
    let closed = neumaier((lo..=n).map(|m| (m as f64).powf(2.0 / l - 2.0))) / (l * l);
    Ok(
        LemmaReport::identity(format!("parseval l={ell} N={n}"), quadrature, closed, TOLERANCE)
            .with_note(format!("M = {}", grid.m())),
    )
}

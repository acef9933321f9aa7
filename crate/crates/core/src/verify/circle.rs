use num_complex::Complex64;

use super::grid::QuadratureGrid;
use super::LemmaReport;
use crate::arith::{integer_kth_root, integer_kth_root_ceil, is_prime};
use crate::expsums::TrigPoly;
use crate::model::ProblemConfig;
use crate::repcount::rep_window_total;
use crate::{Error, Result};

pub const CIRCLE_MAX_N: u64 = 4000;
pub const CIRCLE_MAX_H: u64 = 64;
const TOLERANCE: f64 = 1e-8;

/// Generating function of one summand: bases `m` with `m^ell` in `[lo, hi]`,
/// weight `log m` for primes (or 1 for all integers), damped by
/// `exp(-m^ell / N)` when requested.
fn summand_poly(ell: u32, prime: bool, lo: u64, hi: u64, cfg: &ProblemConfig) -> TrigPoly {
    let nf = cfg.n as f64;
    let terms = (integer_kth_root_ceil(lo.max(1), ell)..=integer_kth_root(hi, ell))
        .filter(|&m| !prime || is_prime(m))
        .map(|m| {
            let x = m.pow(ell);
            let w = if prime { (m as f64).ln() } else { 1.0 };
            let damp = if cfg.damped { (-(x as f64) / nf).exp() } else { 1.0 };
            (x, w * damp)
        })
        .collect();
    TrigPoly::new(terms)
}

/// Compares the window total with the constant coefficient of
/// `X(alpha) Y(alpha) U(-alpha, H) e(-N alpha)` computed on an alias-free grid.
pub fn circle_identity_check(cfg: &ProblemConfig) -> Result<LemmaReport> {
    cfg.validate()?;
    if cfg.n > CIRCLE_MAX_N || cfg.h > CIRCLE_MAX_H {
        return Err(Error::Guard(format!(
            "circle identity needs N <= {CIRCLE_MAX_N} and H <= {CIRCLE_MAX_H}, got N = {}, H = {}",
            cfg.n, cfg.h
        )));
    }
    let name = format!(
        "circle identity {} ({},{}){}",
        cfg.variant,
        cfg.ell1,
        cfg.ell2,
        if cfg.damped { " damped" } else { "" }
    );
    let reference = rep_window_total(cfg)?;
    if cfg.h == 0 {
        return Ok(LemmaReport::identity(name, 0.0, reference, TOLERANCE).with_note("empty window"));
    }
    let (lo, hi) = cfg.summand_bounds();
    // the other summand is at least 1
    let hi = hi.min(cfg.n + cfg.h - 1);
    let x = summand_poly(cfg.ell1, true, lo, hi, cfg);
    let y = summand_poly(cfg.ell2, cfg.variant.second_is_prime(), lo, hi, cfg);
    let u = TrigPoly::new((1..=cfg.h).map(|m| (m, 1.0)).collect());
    let (Some(bx), Some(by)) = (x.band(), y.band()) else {
        return Ok(LemmaReport::identity(name, 0.0, reference, TOLERANCE).with_note("empty support"));
    };
    let n = cfg.n as i64;
    let band = (
        bx.0 as i64 + by.0 as i64 - cfg.h as i64 - n,
        bx.1 as i64 + by.1 as i64 - 1 - n,
    );
    let grid = QuadratureGrid::covering(band.0.unsigned_abs().max(band.1.unsigned_abs()))?;
    grid.check_band(band, 0)?;
    let (vx, vy, vu) = (grid.eval_poly(&x), grid.eval_poly(&y), grid.eval_poly(&u));
    let shift = grid.eval_exp(-n);
    let values: Vec<Complex64> = (0..grid.m()).map(|j| vx[j] * vy[j] * vu[j].conj() * shift[j]).collect();
    let integral = grid.coefficient_of_values(&values, 0);
    Ok(LemmaReport::identity(name, integral.re, reference, TOLERANCE).with_note(format!(
        "M = {}, imaginary part {:.3e}",
        grid.m(),
        integral.im
    )))
}

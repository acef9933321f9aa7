use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::LemmaReport;
use crate::arith::{integer_kth_root, is_prime, is_prime_trial, mangoldt_weights};
use crate::expsums::{
    classical_poly, damped_poly, e_turns, theta_jmax_for, theta_main_approx, turns_frac, ClassicalParams,
    ExpSumKind, Frequency, TrigPoly, DEFAULT_DAMPED_TOL,
};
use crate::sum::ComplexSum;
use crate::Result;

/// Damped terms beyond `exp(-TAIL_CUT)` are dropped from the prime-power tail.
const TAIL_CUT: f64 = 60.0;
/// Work budget (terms times samples) for the O(N) sums `f` and `T`.
const LINEAR_BUDGET: u64 = 20_000_000;
const LINEAR_MAX_N: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSuiteOptions {
    pub samples: usize,
    pub seed: u64,
    /// `H` is drawn uniformly from `[1, min(N, max_h)]`.
    pub max_h: u64,
    /// Sample cap for the damped and theta checks.
    pub damped_samples: usize,
}

impl BoundSuiteOptions {
    pub fn new(samples: usize) -> Self {
        BoundSuiteOptions {
            samples,
            seed: 0x5eed_0001,
            max_h: 1024,
            damped_samples: 256,
        }
    }
}

fn random_alphas(rng: &mut ChaCha8Rng, count: usize) -> Vec<f64> {
    (0..count)
        .map(|_| loop {
            let a: f64 = rng.gen_range(-0.5..=0.5);
            if a != 0.0 {
                break a;
            }
        })
        .collect()
}

/// `|U(alpha, H)| <= min(H, 1/|alpha|)` on random `(alpha, H)`.
pub fn u_bound_report(samples: usize, max_h: u64, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<(f64, u64)> = random_alphas(&mut rng, samples)
        .into_iter()
        .map(|a| (a, rng.gen_range(1..=max_h.max(1))))
        .collect();
    let worst = draws
        .par_iter()
        .map(|&(alpha, h)| {
            let u = (1..=h)
                .map(|m| e_turns(turns_frac(m, alpha)))
                .collect::<ComplexSum>()
                .value();
            u.norm() / (h as f64).min(1.0 / alpha.abs())
        })
        .collect::<Vec<f64>>()
        .into_iter()
        .fold(0.0, f64::max);
    LemmaReport::upper_bound("U bound |U| / min(H, 1/|alpha|)", worst, 1.0, 1e-12)
        .with_note(format!("{samples} samples, H <= {max_h}"))
}

/// `sum log p` over prime powers `p^k`, `k >= 2`, with `p^(k l) <= N`, or
/// with weights `exp(-p^(k l) / N)` over all `k >= 2` when `damped`.
/// Primes are found by trial division.
pub fn prime_power_tail(ell: u32, n: u64, damped: bool) -> f64 {
    let nf = n as f64;
    let top = if damped {
        integer_kth_root((TAIL_CUT * nf).min(u64::MAX as f64 / 2.0) as u64, ell)
    } else {
        integer_kth_root(n, ell)
    };
    let mut acc = crate::sum::NeumaierSum::new();
    for p in (2..=integer_kth_root(top, 2)).filter(|&p| is_prime_trial(p)) {
        let w = (p as f64).ln();
        let mut q = p * p;
        loop {
            let weight = if damped { (-(q as f64).powi(ell as i32) / nf).exp() } else { 1.0 };
            acc.add(w * weight);
            match q.checked_mul(p) {
                Some(next) if next <= top => q = next,
                _ => break,
            }
        }
    }
    acc.value()
}

/// Asserted inequalities and report-only constants for one `N`.
pub fn bound_suite(n: u64, samples: usize) -> Result<Vec<LemmaReport>> {
    bound_suite_with(n, &BoundSuiteOptions::new(samples))
}

pub fn bound_suite_with(n: u64, opts: &BoundSuiteOptions) -> Result<Vec<LemmaReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = vec![u_bound_report(opts.samples, opts.max_h.min(n), opts.seed ^ n)];
    let alphas = random_alphas(&mut rng, opts.samples);
    let few = &alphas[..alphas.len().min(opts.damped_samples)];
    let nf = n as f64;
    for ell in [2u32, 3] {
        let scale = nf.powf(1.0 / (2.0 * ell as f64));

        // S - V: prime powers with exponent at least 2
        let tail = prime_power_tail(ell, n, false);
        let diff = TrigPoly::new(
            mangoldt_weights(1, integer_kth_root(n, ell), false)
                .into_iter()
                .filter(|e| !is_prime(e.m))
                .map(|e| (e.m.pow(ell), e.weight))
                .collect(),
        );
        out.push(LemmaReport::identity(format!("(S-V)(0) sieve vs trial division l={ell}"), diff.at_zero(), tail, 1e-12));
        out.push(
            LemmaReport::upper_bound(format!("(S-V)(0) / N^(1/2l) l={ell}"), tail / scale, 3.0, 0.0)
                .with_note(format!("(S-V)(0) = {tail:.12}")),
        );
        let worst = alphas.par_iter().map(|&a| diff.eval(a).norm()).collect::<Vec<_>>().into_iter().fold(0.0, f64::max);
        out.push(LemmaReport::upper_bound(format!("|S-V|(alpha) <= (S-V)(0) l={ell}"), worst, tail, 1e-12 * tail.max(1.0)));

        // damped analogue
        let d = prime_power_tail(ell, n, true);
        out.push(
            LemmaReport::upper_bound(format!("D_l(N) / N^(1/2l) l={ell}"), d / scale, 3.0, 0.0)
                .with_note(format!("D_l(N) = {d:.12}")),
        );
        let s = damped_poly(ExpSumKind::Stilde, ell, n, DEFAULT_DAMPED_TOL)?;
        let v = damped_poly(ExpSumKind::Vtilde, ell, n, DEFAULT_DAMPED_TOL)?;
        let worst = few
            .par_iter()
            .map(|&a| (s.poly.eval(a) - v.poly.eval(a)).norm())
            .collect::<Vec<_>>()
            .into_iter()
            .fold(0.0, f64::max);
        let slack = s.tail_bound + v.tail_bound + 1e-12 * s.poly.at_zero().max(1.0);
        out.push(LemmaReport::upper_bound(format!("|Stilde-Vtilde|(alpha) <= D_l(N) l={ell}"), worst, d, slack));

        // f and T - f, linear in N
        if n <= LINEAR_MAX_N {
            let params = ClassicalParams::new(n, f64::INFINITY, 0);
            let f = classical_poly(ExpSumKind::F, ell, &params)?;
            let t = classical_poly(ExpSumKind::T, ell, &params)?;
            let f0 = f.at_zero();
            let root = nf.powf(1.0 / ell as f64);
            out.push(LemmaReport::upper_bound(
                format!("f(0) <= N^(1/l)(1 + l/N^(1/l)) l={ell}"),
                f0,
                root * (1.0 + ell as f64 / root),
                0.0,
            ));
            let k = ((LINEAR_BUDGET / n.max(1)) as usize).clamp(1, alphas.len().max(1)).min(alphas.len());
            let rows: Vec<(f64, f64)> = alphas[..k]
                .par_iter()
                .map(|&a| {
                    let fa = f.eval(a);
                    ((fa.norm()), (t.eval(a) - fa).norm() / (1.0 + a.abs() * nf).sqrt())
                })
                .collect();
            let worst_f = rows.iter().map(|r| r.0).fold(0.0, f64::max);
            let worst_tf = rows.iter().map(|r| r.1).fold(0.0, f64::max);
            out.push(LemmaReport::upper_bound(format!("|f(alpha)| <= f(0) l={ell}"), worst_f, f0, 1e-12 * f0));
            out.push(
                LemmaReport::report_only(format!("|T-f| / (1+|alpha|N)^(1/2) l={ell}"), worst_tf, 1.0)
                    .with_note(format!("{k} samples")),
            );
        }
    }

    // theta series against its Y-shape
    let worst = few
        .par_iter()
        .map(|&a| -> Result<f64> {
            let fr = Frequency::new(a, n)?;
            let th = theta_main_approx(&fr, theta_jmax_for(&fr, 1e-13));
            let root = (num_complex::Complex64::from(std::f64::consts::PI) / fr.z).sqrt();
            let series = (th.value + 0.5) / root - 0.5;
            Ok(series.norm() / th.series_shape)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    out.push(LemmaReport::report_only("theta series / shape(Y)", worst, 1.0).with_note(format!("{} samples", few.len())));
    Ok(out)
}

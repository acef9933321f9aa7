use rayon::prelude::*;

use crate::arith::{checked_pow, integer_kth_root, integer_kth_root_ceil, is_prime, primes_up_to};
use crate::model::ProblemConfig;
use crate::sum::NeumaierSum;

/// Outer bases per work item. Fixed so totals do not depend on the number
/// of threads.
pub const OUTER_CHUNK: usize = 64;

#[derive(Debug, Clone, Copy)]
struct Side {
    ell: u32,
    prime: bool,
}

impl Side {
    #[inline]
    fn weight(&self, base: u64) -> f64 {
        if self.prime {
            (base as f64).ln()
        } else {
            1.0
        }
    }
}

pub(super) struct Plan<'a> {
    cfg: &'a ProblemConfig,
    outer: Side,
    inner: Side,
    /// Allowed summand values, inclusive.
    lo: u64,
    hi: u64,
    outer_bases: Vec<u64>,
}

impl<'a> Plan<'a> {
    pub(super) fn new(cfg: &'a ProblemConfig) -> Self {
        let first = Side {
            ell: cfg.ell1,
            prime: true,
        };
        let second = Side {
            ell: cfg.ell2,
            prime: cfg.variant.second_is_prime(),
        };
        let (lo, hi) = cfg.summand_bounds();
        // the other summand is at least 1
        let hi = hi.min((cfg.n + cfg.h).saturating_sub(1));

        let count = |s: &Side| integer_kth_root(hi, s.ell);
        let (outer, inner) = if count(&second) < count(&first) {
            (second, first)
        } else {
            (first, second)
        };

        let top = integer_kth_root(hi, outer.ell);
        let base_lo = integer_kth_root_ceil(lo, outer.ell).max(1);
        let outer_bases = if outer.prime {
            primes_up_to(top).into_iter().filter(|&p| p >= base_lo).collect()
        } else {
            (base_lo..=top).collect()
        };
        Plan {
            cfg,
            outer,
            inner,
            lo,
            hi,
            outer_bases,
        }
    }

    /// Calls `emit(n, weight)` for every representation whose outer base is
    /// in `bases`.
    fn visit(&self, bases: &[u64], mut emit: impl FnMut(u64, f64)) {
        let big_n = self.cfg.n;
        let end = big_n + self.cfg.h;
        for &b in bases {
            let v = checked_pow(b, self.outer.ell).expect("outer base within root bound");
            if v >= end {
                break;
            }
            let y_lo = (big_n.saturating_sub(v) + 1).max(self.lo).max(1);
            let y_hi = (end - v).min(self.hi);
            if y_lo > y_hi {
                continue;
            }
            let w_outer = self.outer.weight(b);
            let c_lo = integer_kth_root_ceil(y_lo, self.inner.ell);
            let c_hi = integer_kth_root(y_hi, self.inner.ell);
            for c in c_lo..=c_hi {
                if self.inner.prime && !is_prime(c) {
                    continue;
                }
                let n = v + checked_pow(c, self.inner.ell).expect("inner base within root bound");
                emit(n, w_outer * self.inner.weight(c) * self.cfg.damping(n));
            }
        }
    }

    pub(super) fn total(&self) -> f64 {
        let partials: Vec<f64> = self
            .outer_bases
            .par_chunks(OUTER_CHUNK)
            .map(|chunk| {
                let mut acc = NeumaierSum::new();
                self.visit(chunk, |_, w| acc.add(w));
                acc.value()
            })
            .collect();
        partials.into_iter().collect::<NeumaierSum>().value()
    }

    pub(super) fn dense(&self) -> Vec<f64> {
        let base = self.cfg.n + 1;
        let lists: Vec<Vec<(u32, f64)>> = self
            .outer_bases
            .par_chunks(OUTER_CHUNK)
            .map(|chunk| {
                let mut out = Vec::new();
                self.visit(chunk, |n, w| out.push(((n - base) as u32, w)));
                out
            })
            .collect();
        let mut values = vec![0.0; self.cfg.h as usize];
        for (i, w) in lists.into_iter().flatten() {
            values[i as usize] += w;
        }
        values
    }
}

//! Exhaustive double-loop reference for single values of the
//! representation functions. Independent of the sieve, the Miller-Rabin
//! test and the root brackets used by the fast paths.

use crate::arith::is_prime_trial;
use crate::model::Variant;
use crate::{Error, Result};

/// Largest `n` the oracle accepts.
pub const BRUTE_MAX_N: u64 = 1_000_000_000;

fn power(base: u64, exp: u32) -> u64 {
    (0..exp).fold(1u64, |acc, _| acc * base)
}

/// Weight of `n` computed by enumerating every pair of bases.
///
/// `cutoff_a` and `big_n` define the truncation `N/A <= summand <= N` of the
/// truncated variants; `damped` multiplies by `exp(-n/N)`.
pub fn rep_brute(
    n: u64,
    variant: Variant,
    ell1: u32,
    ell2: u32,
    cutoff_a: f64,
    damped: bool,
    big_n: u64,
) -> Result<f64> {
    if n > BRUTE_MAX_N {
        return Err(Error::Guard(format!("oracle limited to n <= {BRUTE_MAX_N}, got {n}")));
    }
    let in_support = |s: u64| {
        !variant.is_truncated() || ((s as f64) >= big_n as f64 / cutoff_a && s <= big_n)
    };
    let mut total = 0.0;
    let mut p1 = 2u64;
    while power(p1, ell1) < n {
        let x = power(p1, ell1);
        let mut b = 1u64;
        while power(b, ell2) < n {
            let y = power(b, ell2);
            if x + y == n && in_support(x) && in_support(y) && is_prime_trial(p1) {
                if variant.second_is_prime() {
                    if is_prime_trial(b) {
                        total += (p1 as f64).ln() * (b as f64).ln();
                    }
                } else {
                    total += (p1 as f64).ln();
                }
            }
            b += 1;
        }
        p1 += 1;
    }
    if damped {
        total *= (-(n as f64) / big_n as f64).exp();
    }
    Ok(total)
}

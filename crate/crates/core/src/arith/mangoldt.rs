use serde::{Deserialize, Serialize};

use super::primality::is_prime;
use super::root::{checked_pow, integer_kth_root};
use super::sieve::{primes_in_range, primes_up_to};

/// An integer with a nonzero von Mangoldt weight: `m = p^k`, `weight = log p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightEntry {
    pub m: u64,
    pub weight: f64,
}

/// The prime `p` when `m = p^k` for some `k >= 1`.
pub fn prime_power_base(m: u64) -> Option<u64> {
    if m < 2 {
        return None;
    }
    let top = 63 - m.leading_zeros();
    for k in (1..=top.max(1)).rev() {
        let r = integer_kth_root(m, k);
        if checked_pow(r, k) == Some(m) && is_prime(r) {
            return Some(r);
        }
    }
    None
}

/// Entries `(m, log p)` for every prime power `m = p^k` in `[lo, hi]`,
/// sorted by `m`. With `primes_only` the powers `k >= 2` are dropped, which
/// gives the log-prime weights of a prime-supported sum.
pub fn mangoldt_weights(lo: u64, hi: u64, primes_only: bool) -> Vec<WeightEntry> {
    let lo = lo.max(2);
    if lo > hi {
        return Vec::new();
    }
    let mut out: Vec<WeightEntry> = primes_in_range(lo, hi)
        .iter()
        .map(|p| WeightEntry {
            m: p,
            weight: (p as f64).ln(),
        })
        .collect();
    if !primes_only {
        for p in primes_up_to(integer_kth_root(hi, 2)) {
            let w = (p as f64).ln();
            let mut q = p;
            while let Some(next) = q.checked_mul(p) {
                if next > hi {
                    break;
                }
                q = next;
                if q >= lo {
                    out.push(WeightEntry { m: q, weight: w });
                }
            }
        }
        out.sort_by_key(|e| e.m);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime_trial;

    fn brute_lambda(m: u64) -> f64 {
        for p in 2..=m {
            if is_prime_trial(p) && m.is_multiple_of(p) {
                let mut r = m;
                while r.is_multiple_of(p) {
                    r /= p;
                }
                return if r == 1 { (p as f64).ln() } else { 0.0 };
            }
        }
        0.0
    }

    #[test]
    fn examples() {
        let w = mangoldt_weights(8, 9, false);
        assert_eq!(w, vec![
            WeightEntry { m: 8, weight: 2f64.ln() },
            WeightEntry { m: 9, weight: 3f64.ln() },
        ]);
        assert_eq!(mangoldt_weights(14, 16, false), vec![WeightEntry { m: 16, weight: 2f64.ln() }]);
        assert!(mangoldt_weights(1, 1, false).is_empty());
        assert!(mangoldt_weights(8, 9, true).is_empty());
    }

    #[test]
    fn chebyshev_psi_matches_brute_force() {
        let x = 100_000u64;
        let got: f64 = mangoldt_weights(1, x, false).iter().map(|e| e.weight).sum();
        let want: f64 = (1..=x).map(brute_lambda_fast).sum();
        assert!((got - want).abs() <= 1e-9 * want, "{got} vs {want}");
    }

    // Trial factorisation by the smallest prime factor.
    fn brute_lambda_fast(m: u64) -> f64 {
        if m < 2 {
            return 0.0;
        }
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                let mut r = m;
                while r.is_multiple_of(d) {
                    r /= d;
                }
                return if r == 1 { (d as f64).ln() } else { 0.0 };
            }
            d += 1;
        }
        (m as f64).ln()
    }

    #[test]
    fn small_lambda_agrees_with_definition() {
        for m in 1..500 {
            assert_eq!(brute_lambda(m), brute_lambda_fast(m));
            let w = mangoldt_weights(m, m, false);
            let got = w.first().map_or(0.0, |e| e.weight);
            assert_eq!(got, brute_lambda(m), "m = {m}");
        }
    }

    #[test]
    fn prime_power_base_examples() {
        assert_eq!(prime_power_base(1), None);
        assert_eq!(prime_power_base(2), Some(2));
        assert_eq!(prime_power_base(1024), Some(2));
        assert_eq!(prime_power_base(243), Some(3));
        assert_eq!(prime_power_base(36), None);
        assert_eq!(prime_power_base(15), None);
    }
}

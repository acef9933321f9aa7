//! Randomised cross-checks of the fast kernels against their references.

use crate::arith::{
    checked_pow, integer_kth_root, integer_kth_root_ceil, is_prime, is_prime_trial, primes_in_range,
};
use crate::repcount::{rep_brute, rep_window, rep_window_total};
use crate::{ProblemConfig, Variant};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn variant() -> impl Strategy<Value = Variant> {
    prop::sample::select(Variant::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn window_matches_oracle(
        v in variant(),
        ell1 in 2u32..=4,
        ell2 in 2u32..=4,
        n in 1u64..20_000,
        h in 1u64..60,
        a in prop::sample::select(vec![2.0, 3.5, 10.0, f64::INFINITY]),
        damped in any::<bool>(),
    ) {
        let cfg = ProblemConfig::full(v, ell1, ell2, n, h).with_cutoff(a).with_damping(damped);
        let counts = rep_window(&cfg).unwrap();
        let mut total = 0.0;
        for m in n + 1..=n + h {
            let want = rep_brute(m, v, ell1, ell2, a, damped, n).unwrap();
            let got = counts.at(m);
            prop_assert!((got - want).abs() <= 1e-10 * want.max(1.0), "n={m}: {got} vs {want}");
            total += want;
        }
        let fast = rep_window_total(&cfg).unwrap();
        prop_assert!((fast - total).abs() <= 1e-9 * total.max(1.0));
    }

    #[test]
    fn primality_agrees_with_trial_division(n in 0u64..2_000_000) {
        prop_assert_eq!(is_prime(n), is_prime_trial(n));
    }

    #[test]
    fn segment_lists_exactly_the_primes(lo in 0u64..1_000_000, len in 0u64..5_000) {
        let seg = primes_in_range(lo, lo + len);
        let want: Vec<u64> = (lo..=lo + len).filter(|&m| is_prime_trial(m)).collect();
        prop_assert_eq!(seg.iter().collect::<Vec<_>>(), want);
    }
}

#[test]
fn kth_root_brackets_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7007);
    for _ in 0..1_000_000 {
        let n: u64 = rng.gen();
        let n = n >> rng.gen_range(0..64);
        let k = rng.gen_range(2u32..=8);
        let r = integer_kth_root(n, k);
        assert!(checked_pow(r, k).is_some_and(|p| p <= n), "{n} {k}");
        assert!(checked_pow(r + 1, k).is_none_or(|p| p > n), "{n} {k}");
        let c = integer_kth_root_ceil(n, k);
        assert!(checked_pow(c, k).is_none_or(|p| p >= n), "{n} {k}");
        assert!(c == 0 || checked_pow(c - 1, k).is_some_and(|p| p < n), "{n} {k}");
    }
}

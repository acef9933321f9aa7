/// `base^exp`, or `None` on overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// `floor(n^(1/k))`, exact.
///
/// A floating-point estimate is corrected in integer arithmetic until
/// `r^k <= n < (r+1)^k` holds.
///
/// # Panics
///
/// Panics if `k == 0`.
pub fn integer_kth_root(n: u64, k: u32) -> u64 {
    assert!(k >= 1, "root index must be positive");
    if k == 1 || n < 2 {
        return n;
    }
    if k >= 64 {
        return 1;
    }
    let fits = |r: u64| matches!(checked_pow(r, k), Some(p) if p <= n);

    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64;
    // The seed is within a unit or two of the answer.
    while !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

/// `ceil(n^(1/k))`: the least `r` with `r^k >= n`.
pub fn integer_kth_root_ceil(n: u64, k: u32) -> u64 {
    if n == 0 {
        return 0;
    }
    let r = integer_kth_root(n, k);
    if checked_pow(r, k) == Some(n) {
        r
    } else {
        r + 1
    }
}

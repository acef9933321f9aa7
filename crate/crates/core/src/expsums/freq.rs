use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point `alpha` of the unit circle together with the kernel
/// `z = 1/N - 2 pi i alpha` and `Y = Re(1/z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Frequency {
    pub alpha: f64,
    #[serde(rename = "N")]
    pub n: u64,
    pub z: Complex64,
    #[serde(rename = "Y")]
    pub y: f64,
}

impl Frequency {
    pub fn new(alpha: f64, n: u64) -> Result<Self> {
        if !(-0.5..=0.5).contains(&alpha) {
            return Err(Error::Domain(format!("alpha = {alpha} outside [-1/2, 1/2]")));
        }
        if n == 0 {
            return Err(Error::Domain("N must be positive".into()));
        }
        let nf = n as f64;
        let z = Complex64::new(1.0 / nf, -2.0 * PI * alpha);
        let y = nf / (1.0 + 4.0 * PI * PI * alpha * alpha * nf * nf);
        Ok(Frequency { alpha, n, z, y })
    }
}

/// `frac(f * alpha)` in `[0, 1)`, computed exactly from the binary
/// expansion of `alpha` (the only rounding is the final conversion).
pub fn turns_frac(f: u64, alpha: f64) -> f64 {
    if f == 0 || alpha == 0.0 {
        return 0.0;
    }
    let a = alpha.abs();
    let approx = f as f64 * a;
    let frac = if approx < 1.0 / 1024.0 {
        approx
    } else {
        let bits = a.to_bits();
        let biased = ((bits >> 52) & 0x7ff) as i32;
        let (mant, exp) = if biased == 0 {
            (bits & ((1 << 52) - 1), -1074)
        } else {
            ((bits & ((1 << 52) - 1)) | (1 << 52), biased - 1075)
        };
        if exp >= 0 {
            0.0
        } else {
            // f < 2^64 and f * a >= 2^-10 force a >= 2^-74, so -exp <= 126
            let k = (-exp) as u32;
            let prod = f as u128 * mant as u128;
            let rem = prod & ((1u128 << k) - 1);
            rem as f64 * 2f64.powi(-(k as i32))
        }
    };
    if alpha < 0.0 && frac != 0.0 {
        let r = 1.0 - frac;
        if r >= 1.0 {
            0.0
        } else {
            r
        }
    } else {
        frac
    }
}

/// `e(t) = exp(2 pi i t)` with `t` measured in turns.
#[inline]
pub fn e_turns(t: f64) -> Complex64 {
    let mut t = t - t.round();
    if t == -0.5 {
        t = 0.5;
    }
    let (s, c) = (2.0 * PI * t).sin_cos();
    Complex64::new(c, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_matches_exact_rationals() {
        assert_eq!(turns_frac(5, 0.25), 0.25);
        assert_eq!(turns_frac(3, -0.25), 0.25);
        assert_eq!(turns_frac(4, 0.25), 0.0);
        assert_eq!(turns_frac(0, 0.3), 0.0);
        // 0.125 is exact in binary: 10^12 * 0.125 is an integer
        assert_eq!(turns_frac(1_000_000_000_001, 0.125), 0.125);
        let f = turns_frac(u64::MAX, 0.5);
        assert_eq!(f, 0.5);
    }

    #[test]
    fn frac_agrees_with_wide_arithmetic() {
        // alpha = 0.1 is 3602879701896397 / 2^55 exactly
        let alpha = 0.1f64;
        let mant: u128 = 3_602_879_701_896_397;
        assert_eq!(alpha, mant as f64 / 2f64.powi(55));
        for f in [7u64, 123_456_789, 98_765_432_123] {
            let rem = (f as u128 * mant) % (1u128 << 55);
            let want = rem as f64 / 2f64.powi(55);
            assert_eq!(turns_frac(f, alpha), want);
        }
    }

    #[test]
    fn kernel_invariants() {
        for alpha in [-0.5, -0.1, 0.0, 1e-9, 0.3, 0.5] {
            let fr = Frequency::new(alpha, 10_000).unwrap();
            assert_eq!(fr.z.re, 1e-4);
            assert!(fr.y > 0.0);
            assert!((fr.y - fr.z.inv().re).abs() <= 1e-12 * fr.y);
            let bound = (10_000f64).min(1.0 / (2.0 * PI * alpha.abs()));
            assert!(fr.z.norm().recip() <= bound * (1.0 + 1e-12));
        }
        assert!(Frequency::new(0.6, 10).is_err());
        assert!(Frequency::new(0.1, 0).is_err());
    }

    #[test]
    fn e_turns_values() {
        assert!((e_turns(0.25) - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!((e_turns(0.5) - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!((e_turns(3.0) - Complex64::new(1.0, 0.0)).norm() < 1e-16);
    }
}

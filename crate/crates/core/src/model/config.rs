use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result, MAX_DOMAIN};

/// Which representation function is counted.
///
/// `Rpp*` count `n = p1^l1 + p2^l2` with weight `log p1 log p2`; `Rp*`
/// count `n = p^l1 + m^l2` (`m >= 1` any integer) with weight `log p`.
/// Truncated variants require both summands in `[N/A, N]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    RppTruncated,
    RpTruncated,
    RppFull,
    RpFull,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::RppTruncated,
        Variant::RpTruncated,
        Variant::RppFull,
        Variant::RpFull,
    ];

    /// Both summands are prime powers.
    pub fn second_is_prime(self) -> bool {
        matches!(self, Variant::RppTruncated | Variant::RppFull)
    }

    pub fn is_truncated(self) -> bool {
        matches!(self, Variant::RppTruncated | Variant::RpTruncated)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::RppTruncated => "rpp-truncated",
            Variant::RpTruncated => "rp-truncated",
            Variant::RppFull => "rpp-full",
            Variant::RpFull => "rp-full",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown variant {s:?}")))
    }
}

/// A fully specified counting problem over the window `(N, N + H]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProblemConfig {
    pub ell1: u32,
    pub ell2: u32,
    pub variant: Variant,
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "H")]
    pub h: u64,
    /// The `A` of the lower cutoff `N/A`; ignored by full variants.
    pub cutoff_a: f64,
    /// Weight each `n` by `exp(-n/N)`.
    pub damped: bool,
}

impl ProblemConfig {
    /// Undamped full-variant problem.
    pub fn full(variant: Variant, ell1: u32, ell2: u32, n: u64, h: u64) -> Self {
        ProblemConfig {
            ell1,
            ell2,
            variant,
            n,
            h,
            cutoff_a: f64::INFINITY,
            damped: false,
        }
    }

    pub fn with_cutoff(mut self, a: f64) -> Self {
        self.cutoff_a = a;
        self
    }

    pub fn with_damping(mut self, damped: bool) -> Self {
        self.damped = damped;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.ell1 < 2 || self.ell2 < 2 {
            return Err(Error::Domain(format!(
                "exponents must be >= 2, got ({}, {})",
                self.ell1, self.ell2
            )));
        }
        if self.n < 1 {
            return Err(Error::Domain("N must be positive".into()));
        }
        if self.n.checked_add(self.h).is_none_or(|e| e > MAX_DOMAIN) {
            return Err(Error::Overflow(format!(
                "N + H = {} + {} exceeds 2^63 - 1",
                self.n, self.h
            )));
        }
        if self.variant.is_truncated() && !(self.cutoff_a > 1.0) {
            return Err(Error::Domain(format!(
                "truncated variants need A > 1, got {}",
                self.cutoff_a
            )));
        }
        Ok(())
    }

    /// Inclusive range allowed for each summand: `[ceil(N/A), N]` for the
    /// truncated variants, `[1, N + H]` otherwise.
    pub fn summand_bounds(&self) -> (u64, u64) {
        if self.variant.is_truncated() {
            let lo = (self.n as f64 / self.cutoff_a).ceil().max(1.0) as u64;
            (lo, self.n)
        } else {
            (1, self.n + self.h)
        }
    }

    /// Damping factor `exp(-n/N)` for the window element `n` (1 if undamped).
    #[inline]
    pub fn damping(&self, n: u64) -> f64 {
        if self.damped {
            (-(n as f64) / self.n as f64).exp()
        } else {
            1.0
        }
    }
}

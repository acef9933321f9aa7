use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::constants::derive_constants;
use crate::{Error, Result};

/// Default `epsilon` of the uniform ranges.
pub const DEFAULT_EPSILON: f64 = 0.01;

/// The four short-window asymptotic statements.
///
/// * `T1`: truncated `p1^2 + p2^l2`, uniform range `N^(3/2 - 11/(6 l2) + eps) <= H <= N^(1 - eps)`.
/// * `T2`: full `p1^l1 + p2^l2`, `l1 <= l2`, threshold `N^(1 - a) (log N)^b`.
/// * `T3`: truncated `p^l1 + m^l2`, uniform range `N^(2 - 11/(6 l1) - 1/l2 + eps) <= H <= N^(1 - eps)`.
/// * `T4`: full `p^l + m^2`, threshold `N^(1 - 1/l) (log N)^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    T1,
    T2,
    T3,
    T4,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::T1, Theorem::T2, Theorem::T3, Theorem::T4];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T1 => "T1",
            Theorem::T2 => "T2",
            Theorem::T3 => "T3",
            Theorem::T4 => "T4",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown theorem {s:?}")))
    }
}

/// Lower end of an admissible range, as an exponent of `N`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "exponent", rename_all = "kebab-case")]
pub enum LowerEnd {
    /// `H >= N^(e + eps)` uniformly.
    Uniform(Rational64),
    /// `H` must dominate `N^e (log N)^b`; no constant is attached.
    Threshold(Rational64),
}

impl LowerEnd {
    pub fn exponent(&self) -> Rational64 {
        match *self {
            LowerEnd::Uniform(e) | LowerEnd::Threshold(e) => e,
        }
    }
}

/// Admissible window lengths `H` for one theorem and exponent pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HRange {
    pub theorem: Theorem,
    pub ell1: u32,
    pub ell2: u32,
    #[serde(rename = "N")]
    pub n: u64,
    pub epsilon: Rational64,
    pub lo: LowerEnd,
    /// Upper exponent before `epsilon` is applied (always 1).
    pub hi_exponent: Rational64,
    /// Power of `log N` at the lower end (0 for the uniform ranges).
    pub log_power: Rational64,
    /// The range is nonempty for the given `epsilon` (strict inequality).
    pub nonempty: bool,
    /// The range is nonempty for all sufficiently small `epsilon`.
    pub nontrivial: bool,
}

impl HRange {
    /// `kappa N^e (log N)^b` for thresholds, `N^(e + eps)` for uniform ranges.
    pub fn lower_bound_value(&self, kappa: f64) -> f64 {
        let n = self.n as f64;
        let eps = self.epsilon.to_f64().unwrap();
        match self.lo {
            LowerEnd::Uniform(e) => n.powf(e.to_f64().unwrap() + eps),
            LowerEnd::Threshold(e) => {
                kappa * n.powf(e.to_f64().unwrap()) * n.ln().powf(self.log_power.to_f64().unwrap())
            }
        }
    }

    /// `N^(1 - eps)` for uniform ranges and `N` for thresholds (`H = o(N)`).
    pub fn upper_bound_value(&self) -> f64 {
        let n = self.n as f64;
        match self.lo {
            LowerEnd::Uniform(_) => {
                n.powf((self.hi_exponent - self.epsilon).to_f64().unwrap())
            }
            LowerEnd::Threshold(_) => n.powf(self.hi_exponent.to_f64().unwrap()),
        }
    }

    /// Whether `h` lies in the range at this `N`; `kappa` scales threshold
    /// lower ends.
    pub fn contains(&self, h: u64, kappa: f64) -> bool {
        let h = h as f64;
        self.nonempty && h >= self.lower_bound_value(kappa) && h <= self.upper_bound_value()
    }
}

/// `2 - 11/(6 l2) - 1/l1`, the lower exponent obtained for truncated
/// `p1^l1 + p2^l2` with `l1 <= l2`.
pub fn generalized_uncond_exponent(ell1: u32, ell2: u32) -> Rational64 {
    Rational64::from_integer(2) - Rational64::new(11, 6 * ell2 as i64) - Rational64::new(1, ell1 as i64)
}

fn hypothesis(theorem: &'static str, ell1: u32, ell2: u32, reason: &'static str) -> Error {
    Error::Hypothesis {
        theorem,
        ell1,
        ell2,
        reason,
    }
}

/// Admissible `H` range of `theorem` at `N`.
pub fn admissible_h_range(theorem: Theorem, ell1: u32, ell2: u32, n: u64, epsilon: f64) -> Result<HRange> {
    if !(epsilon > 0.0) || epsilon >= 0.5 {
        return Err(Error::Domain(format!("epsilon must lie in (0, 1/2), got {epsilon}")));
    }
    let eps = Rational64::approximate_float(epsilon)
        .ok_or_else(|| Error::Domain(format!("epsilon {epsilon} not representable")))?;
    if ell1 < 2 || ell2 < 2 {
        return Err(hypothesis(theorem.name(), ell1, ell2, "exponents must be >= 2"));
    }
    let one = Rational64::from_integer(1);
    let zero = Rational64::from_integer(0);
    let (lo, log_power) = match theorem {
        Theorem::T1 => {
            if ell1 != 2 {
                return Err(hypothesis("T1", ell1, ell2, "requires l1 = 2"));
            }
            let e = Rational64::new(3, 2) - Rational64::new(11, 6 * ell2 as i64);
            (LowerEnd::Uniform(e), zero)
        }
        Theorem::T2 => {
            if ell1 > ell2 {
                return Err(hypothesis("T2", ell1, ell2, "requires l1 <= l2"));
            }
            let k = derive_constants(ell1, ell2);
            (LowerEnd::Threshold(one - k.a_param), k.b_param)
        }
        Theorem::T3 => {
            let e = Rational64::from_integer(2)
                - Rational64::new(11, 6 * ell1 as i64)
                - Rational64::new(1, ell2 as i64);
            (LowerEnd::Uniform(e), zero)
        }
        Theorem::T4 => {
            if ell2 != 2 {
                return Err(hypothesis("T4", ell1, ell2, "requires l2 = 2"));
            }
            (LowerEnd::Threshold(one - Rational64::new(1, ell1 as i64)), Rational64::from_integer(2))
        }
    };
    let hi = one;
    let (nonempty, nontrivial) = match lo {
        LowerEnd::Uniform(e) => (e + eps < hi - eps, e < hi),
        LowerEnd::Threshold(e) => (e < hi, e < hi),
    };
    Ok(HRange {
        theorem,
        ell1,
        ell2,
        n,
        epsilon: eps,
        lo,
        hi_exponent: hi,
        log_power,
        nonempty,
        nontrivial,
    })
}

//! Exponential sums over prime powers, powers and integers, their damped
//! (Hardy-Littlewood) versions, and the theta-function approximation of
//! `omega_2`.
//!
//! Every finite sum is materialised as a [`TrigPoly`]: a list of integer
//! frequencies with real coefficients. Evaluation reduces each phase
//! `f * alpha` modulo 1 exactly before taking sine and cosine.

mod classical;
mod damped;
mod freq;
mod poly;
mod theta;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use classical::{classical_poly, classical_sum, ClassicalParams};
pub use damped::{damped_poly, damped_sum, tilde_error, DampedPoly, DEFAULT_DAMPED_TOL};
pub use freq::{e_turns, turns_frac, Frequency};
pub use poly::TrigPoly;
pub use theta::{theta_jmax_for, theta_main_approx, ThetaApprox, DEFAULT_JMAX};

/// Which generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExpSumKind {
    /// `sum Lambda(m) e(m^l alpha)` over `N/A <= m^l <= N`
    S,
    /// `sum log p e(p^l alpha)` over `N/A <= p^l <= N`
    V,
    /// `sum e(m^l alpha)` over `N/A <= m^l <= N`
    T,
    /// `(1/l) sum m^(1/l - 1) e(m alpha)` over `N/A <= m <= N`
    #[serde(rename = "f")]
    F,
    /// `sum_{1 <= m <= H} e(m alpha)`
    U,
    /// `sum Lambda(m) exp(-m^l/N) e(m^l alpha)`, `m >= 1`
    Stilde,
    /// `sum log p exp(-p^l/N) e(p^l alpha)`
    Vtilde,
    /// `sum_{m >= 1} exp(-m^l/N) e(m^l alpha)`
    Omega,
}

impl ExpSumKind {
    pub const ALL: [ExpSumKind; 8] = [
        ExpSumKind::S,
        ExpSumKind::V,
        ExpSumKind::T,
        ExpSumKind::F,
        ExpSumKind::U,
        ExpSumKind::Stilde,
        ExpSumKind::Vtilde,
        ExpSumKind::Omega,
    ];

    pub fn is_damped(self) -> bool {
        matches!(self, ExpSumKind::Stilde | ExpSumKind::Vtilde | ExpSumKind::Omega)
    }

    pub fn name(self) -> &'static str {
        match self {
            ExpSumKind::S => "S",
            ExpSumKind::V => "V",
            ExpSumKind::T => "T",
            ExpSumKind::F => "f",
            ExpSumKind::U => "U",
            ExpSumKind::Stilde => "Stilde",
            ExpSumKind::Vtilde => "Vtilde",
            ExpSumKind::Omega => "Omega",
        }
    }
}

impl fmt::Display for ExpSumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExpSumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExpSumKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown sum kind {s:?}")))
    }
}

/// One evaluated generating function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpSumSample {
    pub kind: ExpSumKind,
    pub ell: u32,
    pub alpha: f64,
    pub value: Complex64,
    /// Bound on the omitted tail (damped kinds; 0 for finite sums).
    pub truncation_bound: f64,
}

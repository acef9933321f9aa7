//! Numerical checks of the identities and explicit inequalities satisfied by
//! the generating functions.
//!
//! Each check yields one or more [`LemmaReport`]s. Identity checks pass when
//! `|observed - reference| <= tolerance * max(1, |reference|)`; bound checks
//! pass when the observed value does not exceed the bound; report-only
//! entries record an observed constant and never fail.

mod bounds;
mod circle;
mod grid;
mod laplace;
mod mean_square;
mod parseval;
mod theta_check;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fmt::sig;

pub use bounds::{bound_suite, bound_suite_with, prime_power_tail, u_bound_report, BoundSuiteOptions};
pub use circle::{circle_identity_check, CIRCLE_MAX_H, CIRCLE_MAX_N};
pub use grid::{fourier_coeff_on_grid, QuadratureGrid};
pub use laplace::{laplace_check, laplace_integral, LaplaceCheck, LaplaceDetail, LAPLACE_MIN_NODES};
pub use mean_square::{mean_square_report, MEAN_SQUARE_MAX_N};
pub use parseval::{parseval_check, PARSEVAL_MAX_N};
pub use theta_check::{theta_grid, theta_modular_check};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ReportOnly,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ReportOnly => "report-only",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub name: String,
    pub observed: f64,
    pub reference: f64,
    pub tolerance: f64,
    /// `observed / reference`, NaN when the reference is zero.
    pub ratio: f64,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

fn ratio(observed: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        f64::NAN
    } else {
        observed / reference
    }
}

impl LemmaReport {
    /// Identity check with relative tolerance.
    pub fn identity(name: impl Into<String>, observed: f64, reference: f64, tolerance: f64) -> Self {
        let ok = (observed - reference).abs() <= tolerance * reference.abs().max(1.0);
        LemmaReport {
            name: name.into(),
            observed,
            reference,
            tolerance,
            ratio: ratio(observed, reference),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            note: String::new(),
        }
    }

    /// `observed <= bound + slack`.
    pub fn upper_bound(name: impl Into<String>, observed: f64, bound: f64, slack: f64) -> Self {
        LemmaReport {
            name: name.into(),
            observed,
            reference: bound,
            tolerance: slack,
            ratio: ratio(observed, bound),
            verdict: if observed <= bound + slack { Verdict::Pass } else { Verdict::Fail },
            note: String::new(),
        }
    }

    pub fn report_only(name: impl Into<String>, observed: f64, reference: f64) -> Self {
        LemmaReport {
            name: name.into(),
            observed,
            reference,
            tolerance: 0.0,
            ratio: ratio(observed, reference),
            verdict: Verdict::ReportOnly,
            note: String::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// False only for a failed assertion.
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: observed={} reference={} tol={} ratio={}",
            self.verdict,
            self.name,
            sig(self.observed, 12),
            sig(self.reference, 12),
            sig(self.tolerance, 12),
            sig(self.ratio, 12)
        )?;
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        Ok(())
    }
}

/// True when no report failed.
pub fn all_passed(reports: &[LemmaReport]) -> bool {
    reports.iter().all(LemmaReport::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rules() {
        assert_eq!(LemmaReport::identity("a", 1.0 + 1e-9, 1.0, 1e-8).verdict, Verdict::Pass);
        assert_eq!(LemmaReport::identity("a", 1.1, 1.0, 1e-8).verdict, Verdict::Fail);
        // absolute scale below 1
        assert_eq!(LemmaReport::identity("a", 1e-9, 0.0, 1e-8).verdict, Verdict::Pass);
        assert_eq!(LemmaReport::upper_bound("b", 3.0, 3.0, 0.0).verdict, Verdict::Pass);
        assert_eq!(LemmaReport::upper_bound("b", 3.1, 3.0, 0.0).verdict, Verdict::Fail);
        let r = LemmaReport::report_only("c", 1e9, 1.0);
        assert!(r.passed());
        assert!(!all_passed(&[r, LemmaReport::identity("d", 2.0, 1.0, 0.0)]));
    }

    #[test]
    fn json_shape() {
        let r = LemmaReport::identity("x", 2.0, 2.0, 1e-10);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["verdict"], "pass");
        assert!(v.get("note").is_none());
        let back: LemmaReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}

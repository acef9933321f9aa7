//! Short-window representation counts for integers of the form
//! `p1^l1 + p2^l2` and `p^l1 + m^l2`, together with the generating functions
//! behind their circle-method analysis and a battery of checks of the
//! identities and explicit inequalities those functions satisfy.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: exact 64-bit number theory (primality, integer roots,
//!   segmented sieving, von Mangoldt weights).
//! * [`model`]: density constants, main terms, cutoffs and the admissible
//!   short-window ranges.
//! * [`repcount`]: windowed representation counts, dense and streaming, and
//!   a brute-force oracle.
//! * [`expsums`]: finite and damped exponential sums, the kernel
//!   `z = 1/N - 2 pi i alpha` and the theta-function approximation.
//! * [`verify`]: quadrature on the unit circle and the identity/bound checks.
//! * [`experiments`]: convergence sweeps, slope fits and CSV/JSON output.

pub mod arith;
pub mod error;
pub mod experiments;
pub mod expsums;
pub mod fmt;
pub mod model;
pub mod repcount;
pub mod sum;
pub mod verify;

#[cfg(test)]
mod proptests;

pub use error::{Error, Result};
pub use experiments::{SweepRow, SweepSpec, SweepTable};
pub use expsums::{ExpSumKind, ExpSumSample, Frequency, TrigPoly};
pub use model::{DerivedConstants, HRange, ProblemConfig, Theorem, Variant};
pub use repcount::WindowCounts;
pub use verify::{LemmaReport, QuadratureGrid, Verdict};

pub use num_complex::Complex64;
pub use num_rational::Rational64;

/// Largest value allowed for `n`, `N` and `N + H`.
pub const MAX_DOMAIN: u64 = (1u64 << 63) - 1;

//! Density constants, cutoffs, main terms and admissible window ranges.

mod config;
mod constants;
mod gamma;
mod main_term;
mod ranges;

pub use config::{ProblemConfig, Variant};
pub use constants::{b_parameter, cutoff_a, derive_constants, log_n, DerivedConstants};
pub use gamma::gamma_fn;
pub use main_term::{main_term, MainTermForm};
pub use ranges::{admissible_h_range, generalized_uncond_exponent, HRange, LowerEnd, Theorem, DEFAULT_EPSILON};

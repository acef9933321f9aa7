use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::gamma::gamma_fn;
use crate::{Error, Result};

/// Constants attached to an exponent pair `(l1, l2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedConstants {
    pub ell1: u32,
    pub ell2: u32,
    /// `1/l1 + 1/l2`
    pub lambda: Rational64,
    /// `Gamma(1/l1) Gamma(1/l2) / (l1 l2 Gamma(lambda))`
    pub c_density: f64,
    /// `l1 / (2 (l1 - 1) l2)`
    pub a_param: Rational64,
    /// `3 l1 / (2 (l1 - 1))`
    pub b_param: Rational64,
}

impl DerivedConstants {
    pub fn lambda_f64(&self) -> f64 {
        self.lambda.to_f64().unwrap()
    }
}

/// # Panics
///
/// Panics if either exponent is below 2.
pub fn derive_constants(ell1: u32, ell2: u32) -> DerivedConstants {
    assert!(ell1 >= 2 && ell2 >= 2, "exponents must be >= 2");
    let (l1, l2) = (ell1 as i64, ell2 as i64);
    let lambda = Rational64::new(1, l1) + Rational64::new(1, l2);
    let g = |x: f64| gamma_fn(x).expect("positive argument");
    let c_density = g(1.0 / l1 as f64) * g(1.0 / l2 as f64)
        / ((l1 * l2) as f64 * g(lambda.to_f64().unwrap()));
    DerivedConstants {
        ell1,
        ell2,
        lambda,
        c_density,
        a_param: Rational64::new(l1, 2 * (l1 - 1) * l2),
        b_param: Rational64::new(3 * l1, 2 * (l1 - 1)),
    }
}

/// `L = log N`.
pub fn log_n(n: u64) -> f64 {
    (n as f64).ln()
}

/// `A(N, d) = exp(d (log N / log log N)^(1/3))`, defined for `N >= 16`.
pub fn cutoff_a(n: u64, d: f64) -> Result<f64> {
    if n < 16 {
        return Err(Error::Domain(format!("cutoff A(N, d) needs N >= 16, got {n}")));
    }
    let l = (n as f64).ln();
    Ok((d * (l / l.ln()).cbrt()).exp())
}

/// `B(N, c, l1, l2) = N^(1 - lambda) A(N, c)`.
pub fn b_parameter(n: u64, c: f64, ell1: u32, ell2: u32) -> Result<f64> {
    let lambda = derive_constants(ell1, ell2).lambda_f64();
    Ok((n as f64).powf(1.0 - lambda) * cutoff_a(n, c)?)
}

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::freq::{e_turns, turns_frac, Frequency};
use crate::sum::ComplexSum;

pub const DEFAULT_JMAX: u32 = 8;

/// Right-hand side of the theta transformation for `omega_2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaApprox {
    pub value: Complex64,
    pub j_max: u32,
    /// Bound on `|(pi/z)^(1/2) sum_{j > j_max} exp(-j^2 pi^2 / z)|`.
    pub tail_bound: f64,
    /// `exp(-pi^2 Y)` for `Y >= 1`, `Y^(-1/2)` below: the shape of the
    /// bound on the whole `j`-series (constant 1).
    pub series_shape: f64,
}

/// Bound on `sum_{j > j_max} exp(-j^2 c)` for `c > 0`.
fn series_tail(j_max: u32, c: f64) -> f64 {
    let j1 = (j_max + 1) as f64;
    let first = (-j1 * j1 * c).exp();
    // ratios of consecutive terms are at most exp(-(2 j_max + 3) c)
    first / (-(-(2.0 * j1 + 1.0) * c).exp_m1())
}

/// `(pi/z)^(1/2)/2 - 1/2 + (pi/z)^(1/2) sum_{j=1}^{j_max} exp(-j^2 pi^2 / z)`.
pub fn theta_main_approx(freq: &Frequency, j_max: u32) -> ThetaApprox {
    let j_max = j_max.max(1);
    let root = (Complex64::from(PI) / freq.z).sqrt();
    let inv = freq.z.inv();
    let decay = PI * PI * freq.y;
    // pi^2 Im(1/z) / (2 pi), the phase of each term per unit j^2, in turns
    let turns = PI * inv.im / 2.0;
    let mut acc = ComplexSum::new();
    for j in 1..=j_max as u64 {
        let jj = j * j;
        let modulus = (-(jj as f64) * decay).exp();
        if modulus == 0.0 {
            break;
        }
        // exp(-i j^2 pi^2 Im(1/z)) = e(-j^2 * turns)
        acc.add(e_turns(-turns_frac(jj, turns)) * modulus);
    }
    let series = acc.value();
    let value = root * 0.5 - 0.5 + root * series;
    let series_shape = if freq.y >= 1.0 {
        (-PI * PI * freq.y).exp()
    } else {
        freq.y.powf(-0.5)
    };
    ThetaApprox {
        value,
        j_max,
        tail_bound: root.norm() * series_tail(j_max, decay),
        series_shape,
    }
}

/// Smallest `j_max >= DEFAULT_JMAX` whose tail bound is at most `tol`.
pub fn theta_jmax_for(freq: &Frequency, tol: f64) -> u32 {
    let decay = PI * PI * freq.y;
    let scale = (PI / freq.z.norm()).sqrt();
    let mut j = DEFAULT_JMAX;
    while scale * series_tail(j, decay) > tol && j < 1 << 20 {
        j = (j * 5 / 4).max(j + 1);
    }
    j
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expsums::{damped_sum, ExpSumKind, DEFAULT_DAMPED_TOL};

    #[test]
    fn zero_frequency_matches_omega() {
        let fr = Frequency::new(0.0, 10_000).unwrap();
        let t = theta_main_approx(&fr, 3);
        let w = damped_sum(ExpSumKind::Omega, 2, &fr, DEFAULT_DAMPED_TOL).unwrap().value;
        assert!((t.value - w).norm() <= 1e-10 * w.norm());
        assert!(t.tail_bound < 1e-300);
    }

    #[test]
    fn conjugate_symmetry() {
        for a in [0.001, 0.01, 0.2, 0.5] {
            let p = theta_main_approx(&Frequency::new(a, 10_000).unwrap(), 8).value;
            let m = theta_main_approx(&Frequency::new(-a, 10_000).unwrap(), 8).value;
            assert!((p - m.conj()).norm() < 1e-12 * p.norm().max(1.0));
        }
    }

    #[test]
    fn jmax_grows_as_y_shrinks() {
        let near = Frequency::new(1e-5, 10_000).unwrap();
        let far = Frequency::new(0.5, 10_000).unwrap();
        assert_eq!(theta_jmax_for(&near, 1e-13), DEFAULT_JMAX);
        assert!(theta_jmax_for(&far, 1e-13) > 100);
    }

    #[test]
    fn series_terms_decrease() {
        let fr = Frequency::new(0.001, 10_000).unwrap();
        assert!(fr.y >= 1.0);
        let c = PI * PI * fr.y;
        let terms: Vec<f64> = (1..6).map(|j| (-((j * j) as f64) * c).exp()).collect();
        assert!(terms.windows(2).all(|w| w[1] <= w[0]));
    }
}

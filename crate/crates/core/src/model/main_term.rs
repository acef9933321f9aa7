use serde::{Deserialize, Serialize};

use super::config::ProblemConfig;
use super::constants::derive_constants;
use crate::sum::NeumaierSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MainTermForm {
    /// `c H N^(lambda - 1)`, divided by `e` for damped problems.
    #[default]
    Collapsed,
    /// `c * sum_{n=N+1}^{N+H} n^(lambda - 1)`, each term times `exp(-n/N)`
    /// for damped problems.
    Refined,
}

/// Predicted main term of the window total.
pub fn main_term(cfg: &ProblemConfig, form: MainTermForm) -> f64 {
    let k = derive_constants(cfg.ell1, cfg.ell2);
    let exponent = k.lambda_f64() - 1.0;
    match form {
        MainTermForm::Collapsed => {
            let base = k.c_density * cfg.h as f64 * (cfg.n as f64).powf(exponent);
            if cfg.damped {
                base / std::f64::consts::E
            } else {
                base
            }
        }
        MainTermForm::Refined => {
            let mut acc = NeumaierSum::new();
            for n in cfg.n + 1..=cfg.n + cfg.h {
                acc.add((n as f64).powf(exponent) * cfg.damping(n));
            }
            k.c_density * acc.value()
        }
    }
}

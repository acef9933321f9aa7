use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Deserialize;

use ppwin_core::experiments::{self, fit_groups, SweepSpec};
use ppwin_core::expsums::{classical_sum, damped_sum, ClassicalParams, Frequency};
use ppwin_core::fmt::sig;
use ppwin_core::model::{admissible_h_range, cutoff_a, derive_constants, main_term, LowerEnd, MainTermForm, Theorem};
use ppwin_core::repcount::{rep_window, rep_window_total};
use ppwin_core::verify::{
    all_passed, bound_suite, circle_identity_check, laplace_check, mean_square_report, parseval_check, theta_grid,
    theta_modular_check, LemmaReport, LAPLACE_MIN_NODES,
};
use ppwin_core::{Error, ProblemConfig, Result};

use crate::args::{Cli, Command, CountArgs, ExpsumArgs, PredictArgs, Suite, SweepArgs, VerifyArgs};

fn g(x: f64) -> String {
    sig(x, 12)
}

/// Runs one command; `Ok(false)` means a check failed.
pub fn run(cli: &Cli) -> Result<bool> {
    let threads = rayon::current_num_threads();
    match &cli.command {
        Command::Count(a) => count(a, threads),
        Command::Predict(a) => predict(a, threads),
        Command::Expsum(a) => expsum(a, threads),
        Command::Verify(a) => verify(a, threads),
        Command::Sweep(a) => sweep(a, threads),
    }
}

fn count(a: &CountArgs, threads: usize) -> Result<bool> {
    let h = match (a.h, a.h_exp) {
        (Some(h), _) => h,
        (None, Some(x)) => {
            if !(x > 0.0) {
                return Err(Error::Domain(format!("--H-exp must be positive, got {x}")));
            }
            let v = (a.n as f64).powf(x);
            if v > a.n as f64 {
                return Err(Error::Guard(format!("H = N^{x} exceeds N = {}", a.n)));
            }
            experiments::window_length(a.n, x)?
        }
        (None, None) => unreachable!("clap requires --H or --H-exp"),
    };
    if h > a.n {
        return Err(Error::Guard(format!("H = {h} exceeds N = {}", a.n)));
    }
    let mut cfg = ProblemConfig::full(a.variant, a.l1, a.l2, a.n, h).with_damping(a.damped);
    if a.variant.is_truncated() {
        let cut = match a.a {
            Some(v) => v,
            None => cutoff_a(a.n, a.d.unwrap_or(1.0))?,
        };
        cfg = cfg.with_cutoff(cut);
    }
    cfg.validate()?;
    println!(
        "# ppwin count l1={} l2={} variant={} N={} H={} A={} damped={} threads={threads}",
        cfg.ell1,
        cfg.ell2,
        cfg.variant,
        cfg.n,
        cfg.h,
        g(cfg.cutoff_a),
        cfg.damped
    );
    let total = if a.dense {
        let w = rep_window(&cfg)?;
        for (n, v) in w.nonzero() {
            println!("{n} {}", g(v));
        }
        w.total()
    } else {
        rep_window_total(&cfg)?
    };
    let predicted = main_term(&cfg, MainTermForm::Collapsed);
    println!("total = {}", g(total));
    println!("main_term = {}", g(predicted));
    println!("ratio = {}", g(if predicted > 0.0 { total / predicted } else { f64::NAN }));
    Ok(true)
}

fn predict(a: &PredictArgs, threads: usize) -> Result<bool> {
    if a.l1 < 2 || a.l2 < 2 {
        return Err(Error::Domain(format!("exponents must be >= 2, got ({}, {})", a.l1, a.l2)));
    }
    println!(
        "# ppwin predict l1={} l2={} N={} epsilon={} threads={threads}",
        a.l1,
        a.l2,
        a.n,
        g(a.epsilon)
    );
    let k = derive_constants(a.l1, a.l2);
    println!("lambda = {} = {}", k.lambda, g(k.lambda_f64()));
    println!("c = {}", g(k.c_density));
    println!("a = {} = {}", k.a_param, g(*k.a_param.numer() as f64 / *k.a_param.denom() as f64));
    println!("b = {} = {}", k.b_param, g(*k.b_param.numer() as f64 / *k.b_param.denom() as f64));
    for t in Theorem::ALL {
        match admissible_h_range(t, a.l1, a.l2, a.n, a.epsilon) {
            Ok(r) => {
                let shape = match r.lo {
                    LowerEnd::Uniform(e) => format!("N^({e} + eps) <= H <= N^(1 - eps)"),
                    LowerEnd::Threshold(e) => format!("kappa N^({e}) (log N)^{} <= H = o(N)", r.log_power),
                };
                println!(
                    "{t}: {shape}; nonempty={} nontrivial={}; at N: [{}, {}]",
                    r.nonempty,
                    r.nontrivial,
                    g(r.lower_bound_value(1.0)),
                    g(r.upper_bound_value())
                );
            }
            Err(e) => println!("{t}: not applicable ({e})"),
        }
    }
    Ok(true)
}

fn expsum(a: &ExpsumArgs, threads: usize) -> Result<bool> {
    println!(
        "# ppwin expsum kind={} l={} alpha={} N={} A={} H={} tol={} threads={threads}",
        a.kind,
        a.ell,
        g(a.alpha),
        a.n,
        g(a.a.unwrap_or(f64::INFINITY)),
        a.h,
        g(a.tol)
    );
    let freq = Frequency::new(a.alpha, a.n)?;
    let s = if a.kind.is_damped() {
        damped_sum(a.kind, a.ell, &freq, a.tol)?
    } else {
        let params = ClassicalParams::new(a.n, a.a.unwrap_or(f64::INFINITY), a.h);
        classical_sum(a.kind, a.ell, &freq, &params)?
    };
    println!("value = {} {} {}i", g(s.value.re), if s.value.im < 0.0 { "-" } else { "+" }, g(s.value.im.abs()));
    println!("abs = {}", g(s.value.norm()));
    println!("truncation_bound = {}", g(s.truncation_bound));
    Ok(true)
}

fn verify(a: &VerifyArgs, threads: usize) -> Result<bool> {
    println!(
        "# ppwin verify suite={} N={} l1={} l2={} H={} variant={} samples={} threads={threads}",
        a.suite.to_possible_value().expect("no skipped variants").get_name(),
        a.n, a.l1, a.l2, a.h, a.variant, a.samples
    );
    let wants = |s: Suite| a.suite == Suite::All || a.suite == s;
    let mut reports: Vec<LemmaReport> = Vec::new();
    let mut emit = |batch: Vec<LemmaReport>| {
        for r in &batch {
            println!("{r}");
        }
        reports.extend(batch);
    };
    if wants(Suite::Circle) {
        let cfg = ProblemConfig::full(a.variant, a.l1, a.l2, a.n, a.h);
        emit(vec![circle_identity_check(&cfg)?]);
    }
    if wants(Suite::Laplace) {
        let ns = [a.n, 2 * a.n, 4 * a.n, 8 * a.n];
        for mu in [0.5, 5.0 / 6.0, 1.0, 1.5] {
            emit(vec![laplace_check(a.n, mu, &ns, LAPLACE_MIN_NODES)?.report]);
        }
    }
    if wants(Suite::Parseval) {
        for ell in [2, 3, 4] {
            emit(vec![parseval_check(ell, a.n, f64::INFINITY)?]);
        }
    }
    if wants(Suite::Theta) {
        emit(vec![theta_modular_check(a.n, &theta_grid(1000), 1e-9)?]);
    }
    if wants(Suite::Bounds) {
        emit(bound_suite(a.n, a.samples)?);
    }
    if wants(Suite::Meansq) {
        let xi = [1.0 / a.n as f64, 0.01, 0.5];
        emit(mean_square_report(a.l1, a.n, &xi)?);
    }
    let ok = all_passed(&reports);
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("summary: {} reports, {failed} failed", reports.len());
    if let Some(path) = &a.json {
        experiments::write_reports_json(&reports, path)?;
    }
    Ok(ok)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepFile {
    sweep: SweepSpec,
    #[serde(default)]
    output: Output,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Output {
    csv: Option<PathBuf>,
    json: Option<PathBuf>,
}

fn read_config(path: &Path) -> Result<SweepFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    toml::from_str(&text).map_err(|e| Error::Serialization(format!("{}: {e}", path.display())))
}

/// Output paths in the config are relative to the config file.
fn resolve(base: &Path, p: &Path) -> PathBuf {
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.parent().unwrap_or(Path::new(".")).join(p)
    }
}

fn sweep(a: &SweepArgs, threads: usize) -> Result<bool> {
    let file = read_config(&a.config)?;
    let spec = file.sweep;
    println!(
        "# ppwin sweep config={} variant={} pairs={:?} N={:?} theta={:?} epsilon={} theorem={} threads={threads}",
        a.config.display(),
        spec.variant,
        spec.ell_pairs,
        spec.n_list,
        spec.theta_list,
        g(spec.epsilon),
        spec.theorem()
    );
    let table = experiments::sweep(&spec)?;
    print!("{}", experiments::table_to_csv(&table));
    for (key, fit) in fit_groups(&table) {
        match fit {
            Ok(f) => println!(
                "fit ({},{}) theta={}: slope={} stderr={} points={}",
                key.0,
                key.1,
                g(key.2),
                g(f.slope),
                g(f.stderr),
                f.points
            ),
            Err(e) => println!("fit ({},{}) theta={}: {e}", key.0, key.1, g(key.2)),
        }
    }
    let csv = a.csv.clone().or(file.output.csv.map(|p| resolve(&a.config, &p)));
    let json = a.json.clone().or(file.output.json.map(|p| resolve(&a.config, &p)));
    if let Some(p) = csv {
        experiments::write_table_csv(&table, &p)?;
    }
    if let Some(p) = json {
        experiments::write_table_json(&table, &p)?;
    }
    Ok(true)
}

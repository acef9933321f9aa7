use std::path::Path;
use std::process::{Command, Output};

fn ppwin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ppwin"))
        .args(args)
        .env("PPWIN_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn line<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no line starting with {key:?} in\n{text}"))
}

#[test]
fn predict_squares() {
    let o = ppwin(&["predict", "--l1", "2", "--l2", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().next().unwrap().starts_with("# ppwin predict l1=2 l2=2"));
    assert!(out.contains("threads=2"));
    assert_eq!(line(&out, "c = "), "0.785398163397");
    assert_eq!(line(&out, "lambda = "), "1 = 1");
    for t in ["T1:", "T2:", "T3:", "T4:"] {
        assert!(out.contains(t));
    }
}

#[test]
fn predict_reports_inapplicable_theorems() {
    let out = stdout(&ppwin(&["predict", "--l1", "3", "--l2", "3"]));
    assert!(line(&out, "T1: ").starts_with("not applicable"));
    assert!(line(&out, "T3: ").contains("nonempty=false"));
}

#[test]
fn count_small_window() {
    let o = ppwin(&["count", "--l1", "2", "--l2", "2", "--variant", "rpp-full", "--N", "50", "--H", "10", "--dense"]);
    assert!(o.status.success());
    let out = stdout(&o);
    // 53 = 2^2 + 7^2 and 58 = 3^2 + 7^2, each in two orders: 2 ln2 ln7 and 2 ln3 ln7
    assert!(out.contains("\n53 2.69760426688"));
    assert!(out.contains("\n58 4.27560160479"));
    assert_eq!(line(&out, "total = "), "6.97320587167");
}

#[test]
fn count_exponent_form_matches_absolute() {
    let a = stdout(&ppwin(&["count", "--l1", "2", "--l2", "3", "--variant", "rp-full", "--N", "1e6", "--H-exp", "0.5"]));
    let b = stdout(&ppwin(&["count", "--l1", "2", "--l2", "3", "--variant", "rp-full", "--N", "1000000", "--H", "1000"]));
    assert_eq!(line(&a, "total = "), line(&b, "total = "));
}

#[test]
fn count_guards_exit_two() {
    let o = ppwin(&["count", "--l1", "2", "--l2", "3", "--variant", "rpp-full", "--N", "1000", "--H-exp", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));
    let both = ppwin(&["count", "--l1", "2", "--l2", "3", "--variant", "rpp-full", "--N", "1000", "--H", "5", "--H-exp", "0.5"]);
    assert_eq!(both.status.code(), Some(2));
    let unknown = ppwin(&["count", "--bogus"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn expsum_prints_complex_value() {
    let o = ppwin(&["expsum", "--kind", "V", "--l", "2", "--alpha", "0.125", "--N", "10000"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(line(&out, "value = ").ends_with('i'));
    let u = stdout(&ppwin(&["expsum", "--kind", "U", "--alpha", "0", "--N", "10", "--H", "37"]));
    assert_eq!(line(&u, "value = "), "37 + 0i");
    let neg = ppwin(&["expsum", "--kind", "Omega", "--l", "2", "--alpha", "-0.25", "--N", "1000"]);
    assert!(neg.status.success());
}

#[test]
fn verify_circle_passes() {
    let o = ppwin(&["verify", "--suite", "circle", "--l1", "2", "--l2", "2", "--N", "1500", "--H", "40"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("[pass] circle identity rpp-full (2,2)"));
    assert!(out.contains("summary: 1 reports, 0 failed"));
}

#[test]
fn verify_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reports.json");
    let o = ppwin(&["verify", "--suite", "parseval", "--N", "1000", "--json", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.matches("\"verdict\": \"pass\"").count(), 3);
}

#[test]
fn verify_guard_is_usage_error() {
    let o = ppwin(&["verify", "--suite", "circle", "--N", "100000"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_writes_reports_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.toml");
    std::fs::copy(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/sweep.toml"), &cfg).unwrap();
    let first = ppwin(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let csv = std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("ell1,ell2,variant,N,theta,H,observed,predicted,ratio,in_range,wall_ms"));
    assert_eq!(lines.count(), 12);
    assert!(dir.path().join("sweep.json").exists());

    let strip = |o: &Output| -> Vec<String> {
        stdout(o)
            .lines()
            .filter(|l| !l.starts_with("ell1,"))
            .map(|l| if l.matches(',').count() == 10 { l.rsplit_once(',').unwrap().0.to_string() } else { l.to_string() })
            .collect()
    };
    let second = ppwin(&["sweep", "--config", cfg.to_str().unwrap(), "--csv", dir.path().join("b.csv").to_str().unwrap()]);
    assert_eq!(strip(&first), strip(&second));
    assert!(stdout(&second).contains("fit (2,3) theta=0.9"));
}

#[test]
fn sweep_rejects_unknown_keys() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    std::fs::write(&cfg, "[sweep]\nvariant = \"rpp-full\"\nell_pairs = [[2, 2]]\nN_list = [1000]\ntheta_list = [0.5]\nbogus = 1\n").unwrap();
    let o = ppwin(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

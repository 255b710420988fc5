use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_plasmon-casimir"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Data rows of a CSV document as (header, rows).
fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines
        .next()
        .unwrap()
        .split(',')
        .map(str::to_owned)
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect();
    (header, rows)
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["dispersion", "--grid", "0"][..],
        &["dispersion", "--grid", "1"],
        &["eta", "--omega-p", "1", "--distance-ratio", "2"],
        &["eta", "--scheme", "nonsense"],
        &["eta", "--grid-min", "1", "--grid-max", "0.5"],
        &["energy", "--omega-p", "-3"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn csv_header_comes_first_and_metadata_is_commented() {
    let out = run(&["eta", "--grid", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.lines().next(),
        Some("distance_ratio,omega_p,eta,eta_short_approx,eta_large_approx")
    );
    for key in ["# tool:", "# scheme: adiabatic", "# abs_tol:", "# rel_tol:"] {
        assert!(text.contains(key), "missing {key}");
    }
    assert_eq!(csv_rows(&text).1.len(), 3);
}

#[test]
fn csv_is_byte_identical_across_runs_and_thread_counts() {
    let args = ["eta", "--grid", "7", "--scheme", "bordag"];
    let a = run_env(&args, &[("PLASMON_CASIMIR_THREADS", "1")]);
    let b = run_env(&args, &[("PLASMON_CASIMIR_THREADS", "4")]);
    let c = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let out = run_env(&["eta", "--grid", "2"], &[("PLASMON_CASIMIR_THREADS", "0")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_round_trips_and_holds_only_finite_numbers() {
    for sub in ["dispersion", "dos", "energy", "asymptotics"] {
        let out = run(&[sub, "--format", "json", "--grid", "12"]);
        assert!(out.status.success(), "{sub}");
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        let again: Value = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(doc, again);
        assert!(doc["meta"]["tool"].is_string());
        let rows = doc["rows"].as_array().unwrap();
        assert!(!rows.is_empty());
        for row in rows {
            for (_, v) in row.as_object().unwrap() {
                assert!(
                    v.is_string() || v.as_f64().is_some_and(f64::is_finite),
                    "{sub}: {v}"
                );
            }
        }
    }
}

#[test]
fn single_point_eta_emits_one_row() {
    for args in [
        &["eta", "--grid", "1"][..],
        &["eta", "--distance-ratio", "0.3"],
        &["eta", "--omega-p", "2"],
    ] {
        let out = run(args);
        assert!(out.status.success());
        assert_eq!(csv_rows(&stdout(&out)).1.len(), 1, "{args:?}");
    }
}

#[test]
fn eta_changes_sign_between_seven_and_nine_hundredths() {
    let out = run(&[
        "eta",
        "--grid",
        "2",
        "--grid-min",
        "0.07",
        "--grid-max",
        "0.09",
    ]);
    let (_, rows) = csv_rows(&stdout(&out));
    assert!(num(&rows[0][2]) > 0.0 && num(&rows[1][2]) < 0.0, "{rows:?}");
}

#[test]
fn lenac_evanescent_prints_a_warning() {
    let out = run(&["eta", "--grid", "1", "--scheme", "lenac-evanescent"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("energy.csv");
    let to_file = run(&["energy", "--grid", "4", "--output", path.to_str().unwrap()]);
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    let to_stdout = run(&["energy", "--grid", "4"]);
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}

#[test]
fn dispersion_branches_are_ordered_and_the_plus_branch_crosses_the_light_line() {
    let out = run(&["dispersion", "--distance-ratio", "1.75", "--grid", "80"]);
    let (_, rows) = csv_rows(&stdout(&out));
    let series = |name: &str| -> Vec<(f64, f64, f64)> {
        rows.iter()
            .filter(|r| r[0] == name)
            .map(|r| (num(&r[1]), num(&r[2]), num(&r[3])))
            .collect()
    };
    let plus = series("plus");
    assert!(plus.iter().any(|&(_, k, w)| w > k) && plus.iter().any(|&(_, k, w)| w < k));
    let (single, minus) = (series("single"), series("minus"));
    assert_eq!(single.len(), minus.len());
    for (s, m) in single.iter().zip(&minus).skip(1) {
        assert_eq!(s.0, m.0);
        assert!(s.2 > m.2);
    }
    for name in ["light", "bulk"] {
        assert_eq!(series(name).len(), 80);
    }
}

#[test]
fn dos_samples_respect_the_guard_band() {
    let x_sp = std::f64::consts::FRAC_1_SQRT_2;
    let out = run(&[
        "dos",
        "--grid",
        "3",
        "--grid-min",
        &format!("{x_sp}"),
        "--grid-max",
        "0.8",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let (_, rows) = csv_rows(&text);
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| (num(&r[0]) - x_sp).abs() > 1e-8));
    assert!(text.contains("# omitted_rows: 1"));
}

#[test]
fn energy_is_attractive_and_nearly_cancels_at_five_wavelengths() {
    let out = run(&["energy", "--grid", "9"]);
    let (_, rows) = csv_rows(&stdout(&out));
    assert!(rows.iter().all(|r| num(&r[3]) < 0.0));

    let out = run(&["energy", "--distance-ratio", "5"]);
    let (_, rows) = csv_rows(&stdout(&out));
    let (pl, ph, total) = (num(&rows[0][1]), num(&rows[0][2]), num(&rows[0][3]));
    assert!(pl.abs() > total.abs() && ph.abs() > total.abs());
}

#[test]
fn validate_passes_by_default_and_with_loose_tolerance() {
    for args in [&["validate"][..], &["validate", "--abs-tol", "1e-3"]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}\n{}", stdout(&out));
        let (_, rows) = csv_rows(&stdout(&out));
        assert!(rows.iter().all(|r| r[4] == "PASS" || r[4] == "INFO"));
    }
}

#[test]
fn validate_fails_with_corrupted_g_plus() {
    let out = run(&["validate", "--corrupt-g-plus", "1.5"]);
    assert_eq!(out.status.code(), Some(1));
    let (_, rows) = csv_rows(&stdout(&out));
    let gamma = rows.iter().find(|r| r[0] == "gamma").unwrap();
    assert_eq!(gamma[4], "FAIL");
}

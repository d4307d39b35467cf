use std::process::{Command, Output};

fn setpeaks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setpeaks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

#[test]
fn enumerate_small_classes() {
    let out = setpeaks(&["enumerate", "3", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "112\n121\n122\n");
    assert_eq!(stdout(&setpeaks(&["enumerate", "1", "1"])), "1\n");
}

#[test]
fn usage_errors_exit_nonzero() {
    let out = setpeaks(&["enumerate", "2", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("k=3"));
    assert_eq!(
        setpeaks(&["total", "--stat", "sym", "--n", "2", "--k", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        setpeaks(&["total", "--stat", "bogus", "--n", "4", "--k", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(setpeaks(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn all_methods_print_identical_totals() {
    for stat in ["sym", "nonsym", "peaks"] {
        for (n, k) in [(7, 3), (9, 4), (10, 2), (8, 8)] {
            let (n, k) = (n.to_string(), k.to_string());
            let values: Vec<String> = ["closed", "brute", "series"]
                .iter()
                .map(|m| {
                    let out =
                        setpeaks(&["total", "--stat", stat, "--n", &n, "--k", &k, "--method", m]);
                    assert!(out.status.success());
                    stdout(&out).to_string()
                })
                .collect();
            assert!(
                values.windows(2).all(|w| w[0] == w[1]),
                "{stat} n={n} k={k}: {values:?}"
            );
        }
    }
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["table", "--stat", "peaks", "--nmax", "9"][..],
        &["series", "--gf", "nsp", "--k", "4"],
        &["stirling", "--nmax", "15"],
        &["aggregate", "9", "4", "--prefix-split", "3"],
    ] {
        let a = setpeaks(args);
        let b = setpeaks(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
    assert_eq!(
        setpeaks(&["aggregate", "9", "4", "--prefix-split", "3"]).stdout,
        setpeaks(&["aggregate", "9", "4"]).stdout
    );
}

#[test]
fn verify_exit_status_follows_mismatches() {
    let out = setpeaks(&["verify", "--nmax", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("mismatches=0"));

    let out = setpeaks(&[
        "verify",
        "--nmax",
        "9",
        "--totals-only",
        "--prefix-split",
        "2",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));

    // Distribution checks from n = 5 onwards hit the bivariate divergence.
    let out = setpeaks(&["verify", "--nmax", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let mismatch_lines: Vec<&str> = text.lines().filter(|l| l.starts_with("MISMATCH")).collect();
    assert!(!mismatch_lines.is_empty());
    assert!(
        mismatch_lines.iter().all(|l| l.contains("-dist\t")),
        "{text}"
    );
}

#[test]
fn table_and_stirling_formats() {
    let out = setpeaks(&["table", "--stat", "sym", "--nmax", "4"]);
    assert_eq!(stdout(&out), "0\n0\t0\n0\t1\t0\n0\t3\t2\t0\n");
    let out = setpeaks(&["stirling", "--nmax", "4"]);
    assert_eq!(stdout(&out).lines().last().unwrap(), "0\t1\t7\t6\t1");
    let out = setpeaks(&[
        "series",
        "--gf",
        "sp",
        "--k",
        "2",
        "--order",
        "5",
        "--derivative",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out)).unwrap();
    assert_eq!(v["coefficients"][5][0], "8");
    assert_eq!(v["derivative"], true);
}

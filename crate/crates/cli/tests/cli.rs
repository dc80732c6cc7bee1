use std::process::{Command, Output};

fn fmzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fmzv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let o = fmzv(&["compute", "--index", "2", "--prime", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "14 (mod 49)\n");
    assert_eq!(
        stdout(&fmzv(&["compute", "--index", "", "--prime", "11"])),
        "1 (mod 121)\n"
    );
    assert_eq!(
        stdout(&fmzv(&["compute", "--index", "1", "--prime", "5"])),
        "0 (mod 25)\n"
    );
    assert_eq!(
        stdout(&fmzv(&[
            "compute", "--index", "2", "--prime", "7", "--power", "1"
        ])),
        "0 (mod 7)\n"
    );
}

#[test]
fn compute_over_a_range() {
    let o = fmzv(&[
        "compute", "--index", "1", "--primes", "5..30", "--skip", "11,13",
    ]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[0], "p=5: 0 (mod 25)");
    assert_eq!(lines.len(), 6); // 5 7 17 19 23 29
    assert!(!stdout(&o).contains("p=11"));
}

#[test]
fn shuffle_examples() {
    let sh = fmzv(&["shuffle", "--kind", "sh", "--left", "1,2", "--right", "1"]);
    assert_eq!(stdout(&sh), "3*(1,1,2) + 1*(1,2,1)\n");
    let tsh = fmzv(&["shuffle", "--kind", "tsh", "--left", "2,3", "--right", "1"]);
    assert_eq!(stdout(&tsh), "1*(1,2,3) + 1*(2,1,3) + 1*(2,3,1)\n");
    let unit = fmzv(&["shuffle", "--kind", "tsh", "--left", "", "--right", "2"]);
    assert_eq!(stdout(&unit), "1*(2)\n");
    assert_eq!(
        fmzv(&["shuffle", "--kind", "sh", "--left", "1,x", "--right", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        fmzv(&["verify", "--id", "mt1", "--l", "1", "--m", "0", "--primes", "7..300"])
            .status
            .code(),
        Some(0)
    );
    let vdm = fmzv(&["verify", "--id", "vdm1", "--l", "3", "--m", "2"]);
    assert_eq!(vdm.status.code(), Some(0));
    assert!(stdout(&vdm).starts_with("PASS vdm1"));
    assert_eq!(
        fmzv(&["verify", "--id", "mt1", "--l", "0", "--m", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(fmzv(&["verify", "--id", "unknown"]).status.code(), Some(2));
    assert_eq!(
        fmzv(&["verify", "--id", "zc", "--r", "2", "--primes", "9..5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(fmzv(&["verify", "--bogus"]).status.code(), Some(2));
}

#[test]
fn csv_report_columns() {
    let o = fmzv(&[
        "verify", "--id", "zc", "--r", "1", "--primes", "5..20", "--format", "csv",
    ]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("id,params,p,lhs,rhs,pass,gated"));
    assert_eq!(lines.next(), Some("zc,r=1,7,14,14,true,true"));
}

#[test]
fn json_report_roundtrips_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = fmzv(&[
        "suite",
        "--max-weight",
        "6",
        "--primes",
        "5..80",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed: fmzv_core::identities::SuiteReport = serde_json::from_str(&text).unwrap();
    assert!(parsed.verdict.is_pass());
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
}

#[test]
fn suite_honours_config_files() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("suite.json");
    std::fs::write(
        &config,
        r#"{"range":{"lo":5,"hi":60},"instances":[{"id":"zc","r":2},{"id":"two_three","a":1,"b":0}]}"#,
    )
    .unwrap();
    let o = fmzv(&["suite", "--config", config.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS zc(r=2)"));
    assert!(text.contains("PASS two_three(a=1;b=0)"));
    assert!(text.ends_with("suite: 2 passed, 0 failed, verdict PASS\n"));

    std::fs::write(
        &config,
        r#"{"range":{"lo":5,"hi":60},"instances":[{"id":"constant","lhs":1,"rhs":0}]}"#,
    )
    .unwrap();
    assert_eq!(
        fmzv(&["suite", "--config", config.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );

    std::fs::write(&config, "{").unwrap();
    assert_eq!(
        fmzv(&["suite", "--config", config.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn default_suite_passes() {
    let o = Command::new(env!("CARGO_BIN_EXE_fmzv"))
        .args(["suite", "--max-weight", "10", "--primes", "5..300"])
        .env("FMZV_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn thread_setting_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_fmzv"))
        .args(["compute", "--index", "1", "--prime", "7"])
        .env("FMZV_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn probe_reports_ratio() {
    let o = fmzv(&[
        "probe", "--index", "2,2,2", "--k", "7", "--primes", "730..900", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["candidate"], "2");
    assert_eq!(v["consistent"], true);
    assert_eq!(
        fmzv(&["probe", "--index", "1,2", "--k", "3", "--primes", "7..50"])
            .status
            .code(),
        Some(2)
    );
}

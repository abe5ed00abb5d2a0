use std::path::Path;
use std::process::{Command, Output};

use fhalg::catalog::{preset, AlgebraSpec, Report, PRESET_NAMES};
use serde_json::Value;

fn fhalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fhalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_json(dir: &Path, name: &str, value: &Value) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn presets_verify_and_check_cleanly() {
    for name in PRESET_NAMES {
        let spec = format!("preset:{name}");
        for cmd in ["verify", "check"] {
            let o = fhalg(&[cmd, &spec]);
            assert_eq!(o.status.code(), Some(0), "{cmd} {spec}: {}", stdout(&o));
        }
    }
}

#[test]
fn json_has_exactly_the_human_keys() {
    for args in [
        vec!["check", "preset:sweedler4"],
        vec!["report", "preset:truncpoly:4"],
        vec!["verify", "preset:taft:3:13"],
        vec!["double", "preset:group:C2"],
    ] {
        let human = stdout(&fhalg(&args));
        let mut json_args = args.clone();
        json_args.push("--json");
        let parsed: Value = serde_json::from_str(&stdout(&fhalg(&json_args))).unwrap();
        let keys: Vec<String> = parsed.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, Report::human_keys(&human), "{args:?}");
    }
}

#[test]
fn preset_files_round_trip_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    for name in PRESET_NAMES {
        let path = dir.path().join("spec.json");
        let o = fhalg(&["preset", name, "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let text = std::fs::read_to_string(&path).unwrap();
        let spec = AlgebraSpec::from_json(&text).unwrap();
        assert_eq!(spec.to_json(), text);
        assert_eq!(spec.build().unwrap(), preset(name).unwrap());
        assert_eq!(stdout(&fhalg(&["preset", name])).trim_end(), text);
    }
}

#[test]
fn double_output_feeds_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let p = path.to_str().unwrap();
    let o = fhalg(&["double", "preset:sweedler4", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in [
        "dim=16",
        "unimodular=true",
        "symmetric=true",
        "quasitriangular=true",
    ] {
        assert!(text.lines().any(|l| l == line), "{line}");
    }
    let o = fhalg(&["report", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "unimodular=true"));
}

#[test]
fn axiom_failure_exits_one_under_verify_and_two_elsewhere() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec: Value =
        serde_json::from_str(&AlgebraSpec::from_hopf(&preset("sweedler4").unwrap()).to_json())
            .unwrap();
    // x·x = 1 breaks the antipode and the multiplicativity of Δ
    spec["mul"]
        .as_array_mut()
        .unwrap()
        .push(serde_json::json!([2, 2, 0, "1"]));
    let bad = write_json(dir.path(), "bad.json", &spec);
    let o = fhalg(&["verify", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAILED"));
    let o = fhalg(&["check", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("axiom failure"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ \"field\": ").unwrap();
    let cases: Vec<Vec<String>> = vec![
        vec!["check".into(), "/no/such/file.json".into()],
        vec!["check".into(), garbage.to_str().unwrap().into()],
        vec!["report".into(), "preset:taft:5:13".into()],
        vec!["frobnicate".into()],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(fhalg(&args).status.code(), Some(2), "{args:?}");
    }
    let o = fhalg(&["check", garbage.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn subpair_reports_the_twist() {
    let dir = tempfile::tempdir().unwrap();
    let emb = write_json(
        dir.path(),
        "emb.json",
        &serde_json::json!([["1", "0", "0", "0"], ["0", "1", "0", "0"]]),
    );
    let o = fhalg(&[
        "subpair",
        "preset:sweedler4",
        "preset:group:C2",
        "--embedding",
        &emb,
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["beta = Id"], Value::Bool(false));
    assert_eq!(
        r["beta"]["coordinates"],
        serde_json::json!(["1", "0", "0", "-1"])
    );

    // span{1, x} is closed under multiplication but not a Hopf subalgebra
    let span = write_json(
        dir.path(),
        "span.json",
        &serde_json::json!([["1", "0", "0", "0"], ["0", "0", "1", "0"]]),
    );
    let dual_numbers = write_json(
        dir.path(),
        "k.json",
        &serde_json::from_str::<Value>(
            &AlgebraSpec::from_hopf(&preset("truncpoly:2").unwrap()).to_json(),
        )
        .unwrap(),
    );
    let o = fhalg(&[
        "subpair",
        "preset:sweedler4",
        &dual_numbers,
        "--embedding",
        &span,
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("comultiplication closed"));
}

#[test]
fn parallel_output_is_identical() {
    for spec in ["preset:taft:3:13", "preset:group:S3"] {
        let a = fhalg(&["check", spec]);
        let b = fhalg(&["--parallel", "check", spec]);
        assert_eq!(a.stdout, b.stdout);
    }
}

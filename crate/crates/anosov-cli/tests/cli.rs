//! End-to-end tests of the `anosov` binary: exit codes, file round-trips,
//! and deterministic output.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_anosov"))
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin()
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

fn tmpdir() -> tempfile::TempDir {
    tempfile::tempdir().expect("create temp dir")
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn validate_catalog_heisenberg() {
    let dir = tmpdir();
    let o = run_in(dir.path(), &["example", "heisenberg3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = run_in(dir.path(), &["validate", "heisenberg3.algebra.json"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("step 2"), "{text}");
    assert!(text.contains("jacobi: pass"), "{text}");
    assert!(text.contains("abelian factor: no"), "{text}");
}

#[test]
fn validate_json_report_is_machine_readable() {
    let dir = tmpdir();
    run_in(dir.path(), &["example", "heisenberg3"]);
    let o = run_in(
        dir.path(),
        &["validate", "heisenberg3.algebra.json", "--json"],
    );
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["jacobi"], "pass");
    assert_eq!(v["step"], 2);
    assert_eq!(v["valid"], true);
    assert_eq!(v["abelian_factor"], false);
    assert_eq!(v["lower_central_series"], serde_json::json!([3, 1, 0]));
}

#[test]
fn validate_fails_on_jacobi_violation() {
    let dir = tmpdir();
    // [X1,X2] = X3, [X1,X3] = X1 violates Jacobi at (1,2,3).
    let path = write(
        dir.path(),
        "bad.json",
        r#"{"dim": 3, "brackets": [
            {"i": 1, "j": 2, "k": 3, "c": "1"},
            {"i": 1, "j": 3, "k": 1, "c": "1"}
        ]}"#,
    );
    let o = run_in(dir.path(), &["validate", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.contains("fail at (1, 2, 3)"), "{text}");
}

#[test]
fn validate_fails_on_grading_violation() {
    let dir = tmpdir();
    let path = write(
        dir.path(),
        "bad_degrees.json",
        r#"{"dim": 3, "degrees": [1, 1, 3],
            "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}]}"#,
    );
    let o = run_in(dir.path(), &["validate", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("fail at (1, 2, 3)"));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tmpdir();
    let cases = [
        r#"{"dim": 3, "brackets": [{"i": 2, "j": 1, "k": 3, "c": "1"}]}"#, // i >= j
        r#"{"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 4, "c": "1"}]}"#, // out of range
        r#"{"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1/0"}]}"#, // zero denominator
        r#"{"dim": 3, "brackets": ["#,                                     // malformed JSON
    ];
    for (n, contents) in cases.iter().enumerate() {
        let path = write(dir.path(), &format!("case{n}.json"), contents);
        let o = run_in(dir.path(), &["validate", path.to_str().unwrap()]);
        assert_eq!(code(&o), 2, "case {n}: {}", stderr(&o));
    }
    // Missing file.
    let o = run_in(dir.path(), &["validate", "nope.json"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn double_writes_golden_heisenberg_outputs() {
    let dir = tmpdir();
    run_in(dir.path(), &["example", "heisenberg3"]);
    let o = run_in(
        dir.path(),
        &["double", "heisenberg3.algebra.json", "--a", "2"],
    );
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    let matrix: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("heisenberg3_doubled_a2.matrix.json")).unwrap(),
    )
    .unwrap();
    let expected = serde_json::json!([
        ["2", "3", "0", "0", "0", "0"],
        ["1", "2", "0", "0", "0", "0"],
        ["0", "0", "2", "3", "0", "0"],
        ["0", "0", "1", "2", "0", "0"],
        ["0", "0", "0", "0", "7", "12"],
        ["0", "0", "0", "0", "4", "7"]
    ]);
    assert_eq!(matrix["rows"], expected);

    let cert: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("heisenberg3_doubled_a2.certificate.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(cert["flags"]["anosov"], true);
    assert_eq!(cert["parameters"]["construction"], "doubling");
    assert_eq!(cert["parameters"]["a"], 2);
    assert_eq!(cert["parameters"]["block_exponents"], serde_json::json!([1, 1, 2]));

    // The doubled algebra file re-validates.
    let o = run_in(
        dir.path(),
        &["validate", "heisenberg3_doubled_a2.algebra.json"],
    );
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("minimal dimension: ok"));
}

#[test]
fn double_filiform_records_block_exponents() {
    let dir = tmpdir();
    run_in(dir.path(), &["example", "filiform", "--k", "3"]);
    let o = run_in(dir.path(), &["double", "filiform_k3.algebra.json", "--a", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let cert: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("filiform_k3_doubled_a2.certificate.json")).unwrap(),
    )
    .unwrap();
    // dim-4 input with degrees (1,1,2,3): blocks B, B, B², B³.
    assert_eq!(cert["algebra"]["dim"], 8);
    assert_eq!(
        cert["parameters"]["block_exponents"],
        serde_json::json!([1, 1, 2, 3])
    );
    assert_eq!(cert["parameters"]["catalog"], "filiform(k=3)");
    assert_eq!(cert["expanding_dim"], 4);
    assert_eq!(cert["contracting_dim"], 4);
}

#[test]
fn certify_flags_numeric_fallback_for_complex_spectra() {
    let dir = tmpdir();
    // Any invertible matrix is an automorphism of an abelian algebra;
    // [[0, -2], [1, 0]] has eigenvalues ±i√2 (modulus √2, off the circle).
    write(dir.path(), "abelian2.json", r#"{"dim": 2, "brackets": []}"#);
    write(
        dir.path(),
        "rot.matrix.json",
        r#"{"rows": [["0", "-2"], ["1", "0"]]}"#,
    );
    let o = run_in(
        dir.path(),
        &[
            "certify",
            "abelian2.json",
            "rot.matrix.json",
            "--out",
            "rot.certificate.json",
        ],
    );
    // Hyperbolic but not unimodular (constant term 2): semantic failure.
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("rot.certificate.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(v["flags"]["hyperbolic"], true);
    assert_eq!(v["flags"]["unimodular"], false);
    assert_eq!(v["classification_mode"], "numeric-fallback");
    assert_eq!(v["expanding_dim"], 2);
    assert_eq!(v["contracting_dim"], 0);
    // And it rechecks: the numeric fallback is deterministic.
    let o = run_in(dir.path(), &["recheck", "rot.certificate.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
}

#[test]
fn double_requires_grading() {
    let dir = tmpdir();
    let path = write(
        dir.path(),
        "ungraded.json",
        r#"{"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}]}"#,
    );
    let o = run_in(dir.path(), &["double", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("grading"), "{}", stderr(&o));
}

#[test]
fn double_rational_constants_need_scale() {
    let dir = tmpdir();
    run_in(dir.path(), &["example", "seven_dim_family", "--k", "2"]);
    let o = run_in(
        dir.path(),
        &["double", "seven_dim_family_k2.algebra.json", "--a", "2"],
    );
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("scale_basis_to_integer"), "{}", stderr(&o));

    let o = run_in(
        dir.path(),
        &[
            "double",
            "seven_dim_family_k2.algebra.json",
            "--scale",
            "--a",
            "2",
        ],
    );
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("scaled basis by L = 5"), "{text}");
    assert!(text.contains("dim 14"), "{text}");
    assert!(text.contains("anosov=true"), "{text}");
}

#[test]
fn certify_examples_and_exit_codes() {
    let dir = tmpdir();
    run_in(dir.path(), &["example", "free_two_step", "--r", "1"]);
    let o = run_in(
        dir.path(),
        &[
            "certify",
            "free_two_step_r1.algebra.json",
            "free_two_step_r1.matrix.json",
            "--out",
            "free.certificate.json",
        ],
    );
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    // Identity on the Heisenberg algebra: valid automorphism, not hyperbolic.
    run_in(dir.path(), &["example", "heisenberg3"]);
    let identity = write(
        dir.path(),
        "id3.matrix.json",
        r#"{"rows": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#,
    );
    let o = run_in(
        dir.path(),
        &[
            "certify",
            "heisenberg3.algebra.json",
            identity.to_str().unwrap(),
            "--out",
            "id.certificate.json",
        ],
    );
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("hyperbolic=false"));
    // Failure witnesses land in the emitted certificate.
    let v: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("id.certificate.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(v["flags"]["anosov"], false);
    let witnesses = v["failure_witnesses"].as_array().unwrap();
    assert!(
        witnesses.iter().any(|w| w.as_str().unwrap().contains("unit-circle")),
        "{witnesses:?}"
    );
    // A failed certificate still rechecks: the claims are honest.
    let o = run_in(dir.path(), &["recheck", "id.certificate.json"]);
    assert_eq!(code(&o), 0);

    // Shape mismatch is an input error.
    let o = run_in(
        dir.path(),
        &[
            "certify",
            "free_two_step_r1.algebra.json",
            identity.to_str().unwrap(),
        ],
    );
    assert_eq!(code(&o), 2);
}

#[test]
fn recheck_accepts_emitted_and_rejects_tampered() {
    let dir = tmpdir();
    run_in(dir.path(), &["example", "heisenberg3"]);
    run_in(
        dir.path(),
        &["double", "heisenberg3.algebra.json", "--a", "3"],
    );
    let cert_path = dir.path().join("heisenberg3_doubled_a3.certificate.json");
    let o = run_in(dir.path(), &["recheck", cert_path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    // Tamper with a recorded claim: flip the hyperbolic flag.
    let text = fs::read_to_string(&cert_path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["flags"]["hyperbolic"] = serde_json::json!(false);
    fs::write(&cert_path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let o = run_in(dir.path(), &["recheck", cert_path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("flags"), "{}", stderr(&o));
}

#[test]
fn report_prints_summary() {
    let dir = tmpdir();
    run_in(dir.path(), &["example", "heisenberg3"]);
    run_in(
        dir.path(),
        &["double", "heisenberg3.algebra.json", "--a", "2"],
    );
    let o = run_in(
        dir.path(),
        &["report", "heisenberg3_doubled_a2.certificate.json"],
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("construction: doubling"), "{text}");
    assert!(text.contains("ANOSOV"), "{text}");
    assert!(text.contains("block exponents: [1, 1, 2]"), "{text}");
}

#[test]
fn unknown_example_and_bad_params_exit_2() {
    let dir = tmpdir();
    let o = run_in(dir.path(), &["example", "octonion"]);
    assert_eq!(code(&o), 2);
    let o = run_in(dir.path(), &["example", "filiform", "--k", "1"]);
    assert_eq!(code(&o), 2);
    let o = run_in(dir.path(), &["example", "seven_dim_family", "--k", "0"]);
    assert_eq!(code(&o), 2);
    // clap rejects a < 2 before we run.
    let o = run_in(dir.path(), &["example", "eight_dim", "--a", "1"]);
    assert_eq!(code(&o), 2);
    let o = run_in(dir.path(), &["double", "x.json", "--a", "1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn example_emits_expected_dimensions() {
    let dir = tmpdir();
    run_in(dir.path(), &["example", "filiform", "--k", "5"]);
    let v: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("filiform_k5.algebra.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(v["dim"], 6);

    run_in(dir.path(), &["example", "seven_dim_family", "--k", "2"]);
    let v: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("seven_dim_family_k2.algebra.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(v["dim"], 7);
    let text = serde_json::to_string(&v);
    assert!(text.unwrap().contains("3/5"));

    run_in(dir.path(), &["example", "free_two_step", "--r", "2"]);
    let v: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("free_two_step_r2.algebra.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(v["dim"], 9);
    let m: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("free_two_step_r2.matrix.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(m["rows"].as_array().unwrap().len(), 9);
}

#[test]
fn batch_catalog_is_byte_identical_across_runs() {
    let dir = tmpdir();
    let a = dir.path().join("run_a");
    let b = dir.path().join("run_b");
    for out in [&a, &b] {
        let o = run_in(
            dir.path(),
            &["example", "--all", "--out", out.to_str().unwrap()],
        );
        assert_eq!(code(&o), 0, "{}", stderr(&o));
    }
    let mut names: Vec<String> = fs::read_dir(&a)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert!(names.len() >= 14, "catalog grid written: {names:?}");
    for name in &names {
        let bytes_a = fs::read(a.join(name)).unwrap();
        let bytes_b = fs::read(b.join(name)).unwrap();
        assert_eq!(bytes_a, bytes_b, "{name} differs between runs");
    }
}

#[test]
fn emitted_files_reparse_to_equal_values() {
    let dir = tmpdir();
    run_in(dir.path(), &["example", "eight_dim", "--a", "2"]);
    let path = dir.path().join("eight_dim_a2.algebra.json");
    let first = fs::read_to_string(&path).unwrap();
    // Re-serialize through validate --json parsing and compare bytes by
    // re-emitting with example again (deterministic writer).
    run_in(dir.path(), &["example", "eight_dim", "--a", "2"]);
    let second = fs::read_to_string(&path).unwrap();
    assert_eq!(first, second);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["degrees"], serde_json::json!([1, 1, 1, 1, 1, 1, 2, 2]));
}

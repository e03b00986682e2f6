use std::path::{Path, PathBuf};

use hopforge::cli::run;
use serde_json::Value;
use tempfile::TempDir;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Output {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn hopforge(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("hopforge").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Runs `construct` and returns the written order file.
fn construct(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path_str(&path)]);
    let out = hopforge(&full);
    assert_eq!(out.code, 0, "{}", out.stderr);
    path
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn construct_reports_conditions() {
    let out = hopforge(&[
        "construct",
        "--family",
        "e3",
        "--p",
        "2",
        "--params",
        "i1=2,i2=1,i3=1,mu=1/t,alpha=1/t,beta=1",
    ]);
    assert_eq!(out.code, 0);
    let v = out.json();
    assert_eq!(v["order"]["ambient"], "group");
    assert_eq!(v["order"]["params"]["mu"], "1/t");
    let checks: Vec<&Value> = v["conditions"]["main"]
        .as_array()
        .unwrap()
        .iter()
        .chain(v["conditions"]["mild"].as_array().unwrap())
        .collect();
    assert_eq!(checks.len(), 5);
    assert!(checks.iter().all(|c| c["holds"] == true));
    assert_eq!(v["conditions"]["nonnegative"], true);

    let out = hopforge(&[
        "construct",
        "--family",
        "dual2",
        "--p",
        "3",
        "--params",
        "i1=0,i2=5,mu=1/t",
    ]);
    assert_eq!(out.code, 0);
    let check = &out.json()["conditions"]["main"][0];
    assert_eq!(check["valuation"], -3);
    assert_eq!(check["bound"], 5);
    assert_eq!(check["holds"], false);
}

#[test]
fn koch_identity_is_the_standard_order() {
    let dir = TempDir::new().unwrap();
    let koch = construct(&dir, "koch.json", &["--family", "koch", "--theta", "identity"]);
    let standard = construct(&dir, "std.json", &["--family", "dual3"]);
    let primal = construct(&dir, "e3.json", &["--family", "e3"]);
    assert_eq!(hopforge(&["verify", path_str(&koch)]).code, 0);
    for dual in [&koch, &standard] {
        let out = hopforge(&["dualize-pair", path_str(dual), path_str(&primal)]);
        assert_eq!(out.code, 0, "{}", out.stdout);
        assert_eq!(out.json()["equal"], true);
        assert_eq!(out.json()["disc_dual"], 0);
    }
}

#[test]
fn koch_rejects_non_integral_matrix() {
    let out = hopforge(&["construct", "--family", "koch", "--p", "3", "--theta", "t^2,0;1/t+t,t"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("not integral"), "{}", out.stderr);
    assert_eq!(
        hopforge(&["construct", "--family", "koch", "--theta", "1,t;0,1"]).code,
        2
    );
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let valid = construct(
        &dir,
        "valid.json",
        &[
            "--family",
            "dual3",
            "--params",
            "i1=2,i2=1,i3=1,mu=1/t,alpha=1/t,beta=1",
        ],
    );
    assert_eq!(hopforge(&["verify", path_str(&valid)]).code, 0);

    let bad = construct(
        &dir,
        "bad.json",
        &["--family", "dual3", "--params", "i1=1,i2=3,i3=0,mu=1/t"],
    );
    let out = hopforge(&["verify", path_str(&bad)]);
    assert_eq!(out.code, 1);
    let v = out.json();
    assert_eq!(v["all_pass"], false);
    assert_eq!(v["report"]["algebra_closed"], "fail");
    assert!(v["report"]["witness_count"].as_u64().unwrap() > 0);
    let first = &v["pth_powers"][0];
    assert_eq!(first["integral"], false);
    assert!(first["coords"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c[0] == "m(0,1,0)" && c[2].as_i64().unwrap() < 0));
}

#[test]
fn dualize_pair_examples() {
    let dir = TempDir::new().unwrap();
    let d111 = construct(&dir, "d111.json", &["--family", "dual3", "--params", "i1=1,i2=1,i3=1"]);
    let e111 = construct(&dir, "e111.json", &["--family", "e3", "--params", "i1=1,i2=1,i3=1"]);
    let e211 = construct(&dir, "e211.json", &["--family", "e3", "--params", "i1=2,i2=1,i3=1"]);

    let out = hopforge(&["dualize-pair", path_str(&d111), path_str(&e111)]);
    assert_eq!(out.code, 0);
    let v = out.json();
    assert_eq!(v["confirmed"], true);
    assert_eq!(v["unimodular"], true);
    assert_eq!(
        (v["disc_dual"].as_i64(), v["disc_group_dual"].as_i64()),
        (Some(24), Some(24))
    );

    let out = hopforge(&["dualize-pair", path_str(&d111), path_str(&e211)]);
    assert_eq!(out.code, 1);
    let v = out.json();
    assert_eq!(v["confirmed"], false);
    assert_eq!(
        (v["disc_dual"].as_i64(), v["disc_group_dual"].as_i64()),
        (Some(24), Some(32))
    );

    // operands in the wrong order are an input error
    assert_eq!(hopforge(&["dualize-pair", path_str(&e111), path_str(&d111)]).code, 2);
}

#[test]
fn dualize_writes_the_dual_lattice() {
    let dir = TempDir::new().unwrap();
    let dual = construct(
        &dir,
        "dual.json",
        &["--family", "dual2", "--p", "3", "--params", "i1=2,i2=1,mu=1/t"],
    );
    let dualized = dir.path().join("dualized.json");
    assert_eq!(
        hopforge(&["dualize", path_str(&dual), "-o", path_str(&dualized)]).code,
        0
    );
    let text = std::fs::read_to_string(&dualized).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["ambient"], "group");
    assert_eq!(v["basis"].as_array().unwrap().len(), 9);
    assert_eq!(hopforge(&["verify", path_str(&dualized)]).code, 0);
    let out = hopforge(&["dualize-pair", path_str(&dual), path_str(&dualized)]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert_eq!(out.json()["disc_dual"], 54);
}

#[test]
fn enumerate_small_grid() {
    let out = hopforge(&["enumerate", "--p", "2", "--grid-bound", "1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let rows = out.json();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 8 * 27);
    for r in rows {
        if r["main"] == true {
            assert_eq!(r["dual"], "pass", "{r}");
        }
        if r["main"] == true && r["mild"] == true {
            assert_eq!(r["primal"], "pass", "{r}");
        }
    }
    let origin = &rows[0];
    assert_eq!(origin["i"], serde_json::json!([0, 0, 0]));
    assert_eq!(
        (origin["mu"].as_str(), origin["alpha"].as_str(), origin["beta"].as_str()),
        (Some("0"), Some("0"), Some("0"))
    );
    assert_eq!(origin["disc"], 0);
    // (mu, m mu, -m) with m = 1 shares a class with (mu, 0, 0)
    let find = |mu: &str, a: &str, b: &str| {
        rows.iter()
            .find(|r| r["i"] == serde_json::json!([1, 1, 1]) && r["mu"] == mu && r["alpha"] == a && r["beta"] == b)
            .unwrap()["class"]
            .clone()
    };
    assert_eq!(find("1/t", "1/t", "1"), find("1/t", "0", "0"));
}

#[test]
fn enumerate_gates_deep_runs() {
    let out = hopforge(&["enumerate", "--p", "3", "--grid-bound", "0", "--pool", "0"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.json()[0]["dual"], "skipped");
    let out = hopforge(&["enumerate", "--p", "3", "--n", "2", "--grid-bound", "0", "--pool", "0"]);
    assert_eq!(out.json()[0]["dual"], "pass");
}

#[test]
fn identities_all_pass() {
    for p in ["2", "3", "5"] {
        let out = hopforge(&["identities", "--p", p]);
        assert_eq!(out.code, 0);
        let v = out.json();
        assert_eq!(v.as_array().unwrap().len(), 3);
        assert!(v.as_array().unwrap().iter().all(|o| o["holds"] == true));
    }
    let table = hopforge(&["identities", "--format", "table"]);
    assert_eq!(table.stdout.lines().filter(|l| l.ends_with("pass")).count(), 9);
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let cases: Vec<Vec<String>> = vec![
        vec!["construct".into(), "--family".into(), "nope".into()],
        vec![
            "construct".into(),
            "--family".into(),
            "dual3".into(),
            "--p".into(),
            "4".into(),
        ],
        vec![
            "construct".into(),
            "--family".into(),
            "dual3".into(),
            "--params".into(),
            "gamma=1".into(),
        ],
        vec![
            "construct".into(),
            "--family".into(),
            "dual2".into(),
            "--n".into(),
            "3".into(),
        ],
        vec!["enumerate".into(), "--pool".into(), "".into()],
        vec!["enumerate".into(), "--pool".into(), "1/0".into()],
        vec![
            "verify".into(),
            dir.path().join("missing.json").to_str().unwrap().into(),
        ],
        vec!["verify".into(), path_str(&write(&dir, "junk.json", "{")).into()],
        vec![
            "verify".into(),
            path_str(&write(
                &dir,
                "extra.json",
                r#"{"p":2,"n":1,"ambient":"dual","family":"dual1","color":1}"#,
            ))
            .into(),
        ],
        vec![
            "verify".into(),
            path_str(&write(
                &dir,
                "two.json",
                r#"{"p":2,"n":1,"ambient":"dual","family":"dual1","basis":[]}"#,
            ))
            .into(),
        ],
        vec!["frobnicate".into()],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = hopforge(&args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stdout);
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn degree_cap_exceeded_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let order = construct(
        &dir,
        "d.json",
        &[
            "--family",
            "dual3",
            "--params",
            "i1=2,i2=1,i3=1,mu=1/t+t^3,alpha=1/t,beta=1",
        ],
    );
    let out = hopforge(&["verify", "--degree-cap", "1", path_str(&order)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("degree"), "{}", out.stderr);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let bad = construct(
        &dir,
        "bad.json",
        &["--family", "dual3", "--params", "i1=1,i2=3,i3=0,mu=1/t"],
    );
    for args in [
        vec!["enumerate", "--p", "2", "--grid-bound", "1"],
        vec!["verify", path_str(&bad)],
        vec!["dualize", path_str(&bad)],
        vec![
            "enumerate",
            "--format",
            "table",
            "--p",
            "3",
            "--n",
            "2",
            "--grid-bound",
            "2",
        ],
    ] {
        let a = hopforge(&args);
        let b = hopforge(&args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.code, b.code);
    }
}

#[test]
fn help_exits_zero() {
    let out = hopforge(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("enumerate"));
}

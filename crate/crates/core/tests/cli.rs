//! Command-line contract: exit codes, JSON schema and worked invocations.

use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qsym").chain(args.iter().copied());
    let code = qsym::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    let doc = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\nstdout: {out}\nstderr: {err}"));
    (code, doc)
}

#[test]
fn smallest_symmetry_case() {
    let (code, doc) = run_json(&[
        "verify", "thm3", "--n", "1", "--r", "1", "--w1", "1", "--w2", "3", "--x", "0",
    ]);
    assert_eq!(code, 0);
    let row = &doc["results"][0];
    assert_eq!(row["lhs"], "(-1)/(1+q)");
    assert_eq!(row["rhs"], "(-1)/(1+q)");
    assert_eq!(row["equal"], true);
}

#[test]
fn grid_run_passes() {
    let (code, doc) = run_json(&[
        "verify", "thm4", "--grid", "--n-max", "4", "--r-max", "2", "--w-set", "1,3,5", "--x-set", "0,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"].as_array().unwrap().len(), 5 * 2 * 3 * 3 * 2);
}

#[test]
fn json_schema_is_stable() {
    for args in [
        &["verify", "thm1", "--n-max", "3", "--r", "2", "--w1", "3", "--w2", "5"][..],
        &["verify", "thm3", "--n", "2", "--w1", "3", "--w2", "5", "--q", "1/2"],
        &[
            "verify", "cor2", "--n", "2", "--w1", "1", "--w2", "3", "--p", "3", "--N", "3", "--q", "4",
        ],
        &["integral", "moment", "--p", "3", "--N", "2", "--n", "1"],
        &[
            "integral",
            "shift-defect",
            "--p",
            "3",
            "--N",
            "2",
            "--n",
            "1",
            "--f",
            "0,1",
        ],
    ] {
        let (code, doc) = run_json(args);
        assert_eq!(code, 0, "{args:?}");
        assert!(doc["command"].is_string() && doc["params"].is_object());
        for row in doc["results"].as_array().unwrap() {
            for key in ["case", "lhs", "rhs", "equal", "defect_valuation"] {
                assert!(row.get(key).is_some(), "{args:?}: missing {key} in {row}");
            }
        }
    }
}

#[test]
fn integral_identity_reports_every_level() {
    let (code, doc) = run_json(&[
        "verify", "cor2", "--n", "2", "--r", "1", "--w1", "1", "--w2", "3", "--p", "3", "--N", "4", "--q", "4",
    ]);
    assert_eq!(code, 0);
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for (k, row) in rows.iter().enumerate() {
        assert_eq!(row["case"]["N"], k + 1);
        let v = &row["defect_valuation"];
        assert!(v == "infinity" || v.as_i64().unwrap() >= k as i64 - 1, "{row}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "thm3", "--w1", "2", "--w2", "3"][..],
        &["verify", "thm3", "--r", "0"],
        &["verify", "thm9"],
        &["verify", "thm3", "--n", "x"],
        &["verify", "cor2", "--n", "1", "--p", "9", "--N", "2"],
        &["table", "tsum", "--w", "4"],
        &["integral", "moment", "--p", "4", "--N", "2", "--n", "1"],
        &["integral", "moment", "--p", "3", "--N", "2", "--q", "2"],
        &["integral", "shift-defect", "--p", "3", "--N", "2", "--n", "1"],
        &["frobnicate"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}: no diagnostic");
    }
}

#[test]
fn non_unit_denominator_exits_one() {
    let (code, _, err) = run(&["integral", "sum", "--p", "3", "--N", "1", "--f", "1/3"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn q_euler_table() {
    let (code, out, _) = run(&[
        "table", "qeuler", "--n-max", "2", "--r", "1", "--x", "0", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    let values: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(values, ["1", "(-1)/(1+q)", "(-1+q)/(1+q+q^2+q^3)"]);

    let (code, doc) = run_json(&["table", "qeuler", "--n-max", "0", "--r", "5", "--x", "0"]);
    assert_eq!(code, 0);
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["value"], "1");
}

#[test]
fn power_sum_table() {
    let (code, doc) = run_json(&["table", "tsum", "--n", "1", "--r", "1", "--w", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(rows[1]["i"], 1);
    assert_eq!(rows[1]["value"], "q");
}

#[test]
fn classical_moment_example() {
    let (code, doc) = run_json(&[
        "integral", "moment", "--p", "3", "--N", "2", "--n", "1", "--r", "1", "--x", "0", "--q", "1",
    ]);
    assert_eq!(code, 0);
    let top = &doc["results"][1];
    assert_eq!(top["lhs"], "4");
    assert_eq!(top["rhs"], "4");
    assert_eq!(top["target"], "-1/2");
    assert!(top["defect_valuation"].as_i64().unwrap() >= 2);
}

#[test]
fn shift_defect_example() {
    let (code, doc) = run_json(&[
        "integral",
        "shift-defect",
        "--p",
        "3",
        "--N",
        "2",
        "--n",
        "1",
        "--f",
        "0,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"][1]["defect_valuation"], 2);
}

#[test]
fn alternative_formats() {
    let (code, out, _) = run(&[
        "verify", "thm3", "--n", "1", "--w1", "1", "--w2", "3", "--format", "latex",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("\\begin{tabular}") && out.contains("\\frac"));
    let (code, out, _) = run(&[
        "verify", "thm3", "--n", "1", "--w1", "1", "--w2", "3", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn output_file_and_determinism() {
    let dir = std::env::temp_dir().join(format!("qsym-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("grid.json");
    let args = [
        "verify", "thm3", "--grid", "--n-max", "3", "--r-max", "2", "--w-set", "5,1,3", "--x-set", "1,0",
    ];
    let (code, _, _) = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&path).unwrap();
    let (_, again, _) = run(&args);
    assert_eq!(written.trim_end(), again.trim_end());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_matches_library_entry_point() {
    let args = ["table", "tsum", "--n", "2", "--r", "2", "--w", "3"];
    let output = Command::new(env!("CARGO_BIN_EXE_qsym")).args(args).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(String::from_utf8(output.stdout).unwrap(), run(&args).1);
    let bad = Command::new(env!("CARGO_BIN_EXE_qsym"))
        .args(["verify", "thm3", "--w1", "2"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

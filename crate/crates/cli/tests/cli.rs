use std::process::{Command, Output};

use serde_json::Value;

fn spinlow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinlow")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = spinlow(args);
    let v =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

#[test]
fn orbit_counts_b3_q3() {
    let (code, v) = json(&["geom", "orbits", "--family", "B", "--n", "3", "--q", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"][0], serde_json::json!({"singular": 80, "plus": 90, "minus": 72}));
    assert_eq!(v["schema"], "spinlow.report/1");
}

#[test]
fn degree_of_one_symbol() {
    let (code, v) = json(&["degree", "--family", "B", "--n", "6", "--symbol", "0,1,6;"]);
    assert_eq!(code, 0);
    // q(q^6-1)(q^5-1)/(2(q+1))
    let coeffs: Vec<&str> = v["rows"][0]["degree"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs, ["0", "1/2", "-1/2", "1/2", "-1/2", "1/2", "-1", "1/2", "-1/2", "1/2", "-1/2", "1/2"]);
    assert_eq!(v["rows"][0]["a_value"], 1);
}

#[test]
fn brauer_list_carries_kappa_provenance() {
    let (code, v) = json(&["brauer", "list", "--family", "B", "--n", "5", "--q", "3", "--ell", "11"]);
    assert_eq!(code, 0);
    let row = v["rows"].as_array().unwrap().iter().find(|r| r["degree"] == "14639").expect("14639 listed");
    assert_eq!(row["kappa"], "kappa(11, q^5-1)");
    assert_eq!(row["complex_degree"], "14640");
}

#[test]
fn exit_codes() {
    assert_eq!(spinlow(&["degree", "--family", "X", "--n", "3"]).status.code(), Some(2));
    assert_eq!(spinlow(&["nonsense"]).status.code(), Some(2));
    assert_eq!(spinlow(&["degree", "--family", "B", "--n", "3", "--symbol", "0,1;"]).status.code(), Some(2));
    assert_eq!(spinlow(&["--help"]).status.code(), Some(0));
    let budget =
        spinlow(&["geom", "orbits", "--family", "B", "--n", "6", "--q", "5", "--method", "naive", "--budget", "1000"]);
    assert_eq!(budget.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&budget.stderr).contains("budget"));
    let guard = spinlow(&["brauer", "list", "--family", "B", "--n", "5", "--q", "3", "--ell", "5"]);
    assert_eq!(guard.status.code(), Some(1));
}

#[test]
fn theorem_aliases() {
    let (_, a) = json(&["audit", "--theorem", "2.3", "--n", "5", "--q", "3"]);
    let (_, b) = json(&["audit", "--theorem", "spin-odd", "--n", "5", "--q", "3"]);
    assert_eq!(a, b);
    let (code, v) = json(&["audit", "--theorem", "B", "--n", "5", "--q", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["parameters"]["theorem"], "brauer-odd");
}

#[test]
fn output_is_byte_stable_across_thread_counts() {
    for args in [
        &["verify", "all", "--max-n", "8"][..],
        &["degree", "--family", "D-", "--n", "7", "--format", "csv"][..],
        &["gap-scan", "--family", "B", "--n", "6", "--qmax", "19", "--format", "md"][..],
    ] {
        let one = spinlow(&[args, &["--jobs", "1"]].concat());
        let many = spinlow(&[args, &["--jobs", "4"]].concat());
        let again = spinlow(args);
        assert_eq!(one.stdout, many.stdout, "{args:?}");
        assert_eq!(one.stdout, again.stdout, "{args:?}");
    }
}

#[test]
fn verify_all_reports_every_suite() {
    let (code, v) = json(&["verify", "all", "--max-n", "10"]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let gap = rows.iter().find(|r| r["suite"] == "gap-scan").unwrap();
    assert_eq!(gap["status"], "known-deviation");
    assert!(rows.iter().filter(|r| r["suite"] != "gap-scan").all(|r| r["status"] == "pass"));
}

#[test]
fn config_file_sets_budget() {
    let dir = std::env::temp_dir().join(format!("spinlow-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cfg.toml");
    std::fs::write(&path, "budget = 10\n").unwrap();
    let out = spinlow(&["geom", "orbits", "--family", "B", "--n", "3", "--q", "3", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    std::fs::write(&path, "budgt = 10\n").unwrap();
    let out = spinlow(&["geom", "orbits", "--family", "B", "--n", "3", "--q", "3", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tables_fragment_csv() {
    let out = spinlow(&["brauer", "tables", "--which", "Bn", "--n", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("label,a_value,degree,c1,"));
    assert_eq!(text.lines().count(), 1 + 10);
}

use serde_json::Value;

use ppcd::cli::dispatch;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ppcd").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn count_query() {
    let v = json(&["count", "--n", "7", "--p", "5"]);
    assert_eq!(v["formula"], 4);
    assert_eq!(v["enumerated"], 4);
    assert_eq!(v["agree"], true);
}

#[test]
fn verify_an_rows() {
    let (code, out, _) = run(&["verify-an", "--n-max", "20", "--primes", "5"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,p,count_formula,count_enum,ext_degrees_found,bound_ok");
    assert_eq!(lines.len(), 15);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
    assert!(lines[1].starts_with("7,5,4,4,"));
}

#[test]
fn degrees_of_one_partition() {
    let v = json(&["degrees", "--partition", "3,1,1", "--p", "5"]);
    assert_eq!(v["degree"], "6");
    assert_eq!(v["pprime"], true);
    assert_eq!(v["valuation"], 0);
}

#[test]
fn degrees_grid() {
    let (code, out, _) = run(&["degrees", "--n", "5", "--p", "5"]);
    assert_eq!(code, 0);
    // 5'-partitions of 5 are exactly the hooks
    assert_eq!(out.lines().count(), 1 + 5);
    let (_, all, _) = run(&["degrees", "--n", "5", "--all", "--format", "json"]);
    assert_eq!(all.lines().count(), 7);
}

#[test]
fn hooks_listing() {
    let v = json(&["hooks", "--n", "7", "--p", "5"]);
    assert_eq!(v["count"], 4);
    let layered = json(&["hooks", "--n", "7", "--p", "5", "--layered"]);
    assert_eq!(v, layered);
}

#[test]
fn lie_queries() {
    let v = json(&["lie-pair", "--family", "PSL2", "--q", "7", "--p", "5"]);
    assert_eq!(v["chi1"]["degree"], "8");
    assert_eq!(v["chi2"]["degree"], "6");
    assert_eq!(v["chi1"]["extends_to_aut"], true);
    assert_eq!(v["nondivisible"], true);
    let v = json(&["lie-pair", "--family", "Suzuki", "--q", "32", "--p", "31"]);
    assert_eq!((v["chi1"]["degree"].as_str(), v["chi2"]["degree"].as_str()), (Some("1024"), Some("1025")));
    let v = json(&["lie-pair", "--family", "B", "--n", "3", "--q", "3", "--p", "5"]);
    assert_eq!(v["ok"], true);
}

#[test]
fn verify_lie_grid() {
    let (code, out, _) = run(&["verify-lie", "--q-max", "9", "--p-max", "13", "--families", "A,2A"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("family,n,q,p,d1,d2,ok\n"));
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")));
    let (code, out, _) = run(&["verify-lie", "--exceptional", "--q-max", "32", "--p-max", "31"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("Suzuki,,32,31,1024,1025,")));
}

#[test]
fn degree_tables() {
    let v = json(&["ctbl", "--bundled", "A5", "--p", "5"]);
    assert_eq!(v["cd_pprime_size"], 3);
    let v = json(&["ctbl", "--pgl2", "7", "--p", "7"]);
    assert_eq!(v["cd_pprime_size"], 3);

    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let good = dir.join("s5.json");
    std::fs::write(&good, r#"{"name":"S5","order":120,"complete":true,"degrees":[[1,2],[4,2],[5,2],[6,1]]}"#).unwrap();
    let v = json(&["ctbl", "--file", good.to_str().unwrap(), "--p", "2"]);
    assert_eq!(v["cd_pprime"], serde_json::json!(["1", "5"]));

    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"name":"X","order":100,"complete":true,"degrees":[[1,1]]}"#).unwrap();
    let (code, _, err) = run(&["ctbl", "--file", bad.to_str().unwrap(), "--p", "2"]);
    assert_eq!(code, 1);
    let record: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(record["error"]["kind"], "sum_of_squares");
}

#[test]
fn precondition_errors_exit_one() {
    for args in [
        &["count", "--n", "7", "--p", "4"][..],
        &["frobnicate"],
        &["count", "--n", "seven", "--p", "5"],
        &["lie-pair", "--family", "PSL2", "--q", "6", "--p", "5"],
        &["verify-an", "--n-max", "6"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        let record: Value = serde_json::from_str(err.trim()).unwrap();
        assert!(record["error"]["kind"].is_string());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-an", "--n-min", "20", "--n-max", "45", "--primes", "5,7"];
    assert_eq!(run(&args), run(&args));
    let args = ["verify-lie", "--q-max", "16", "--p-max", "41"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn scan_bound_flag() {
    let (code, out, _) = run(&["verify-an", "--n-min", "30", "--n-max", "30", "--primes", "5", "--exact-bound", "10"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().ends_with(",true"));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify-an"));
}

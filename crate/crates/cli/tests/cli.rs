use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str], threads: Option<usize>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_enriched-center"));
    cmd.args(args);
    if let Some(n) = threads {
        cmd.env("ENRICHED_CENTER_THREADS", n.to_string());
    }
    cmd.output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = run(&a, None);
    let v = serde_json::from_slice(&out.stdout).expect("json report");
    (out.status.code().expect("exit code"), v)
}

fn scratch(name: &str, text: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn validate_fibonacci_passes() {
    let (code, v) = json(&["validate", "--base", &fixture("fib.toml")]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn mtc_on_z5_compares_25_homs() {
    let (code, v) = json(&["verify", "--theorem", "mtc", "--base", &fixture("z5.toml")]);
    assert_eq!(code, 0);
    let checks = v["checks"].as_array().unwrap();
    let homs: Vec<_> = checks.iter().filter(|c| c["name"] == "center hom").collect();
    assert_eq!(homs.len(), 25);
    for h in homs {
        let loc = h["location"].as_array().unwrap();
        assert_eq!(h["got"], if loc[0] == loc[1] { "0" } else { "zero" });
        assert_eq!(h["ok"], true);
    }
    let braids = checks.iter().filter(|c| c["name"] == "braiding equals R-symbols").count();
    assert_eq!(braids, 25);
}

#[test]
fn center_against_oracle_on_symmetric_z2() {
    let (code, v) = json(&["center", "--base", &fixture("z2triv.toml"), "--against-oracle"]);
    assert_eq!(code, 0);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    assert!(checks.iter().all(|c| c["name"] == "center hom equals transparent part" && c["ok"] == true));
    for row in v["data"]["center_homs"].as_array().unwrap() {
        for h in row.as_array().unwrap() {
            let dims = h["hom"]["dims"].as_object().unwrap();
            assert_eq!(dims.values().map(|d| d.as_u64().unwrap()).sum::<u64>(), 1);
        }
    }
}

#[test]
fn violated_axioms_exit_with_one_and_list_every_failure() {
    let text = std::fs::read_to_string(fixture("semion.toml")).unwrap();
    let bad = scratch("semion_bad.toml", &text.replace("\"s,s,1\" = \"1/4\"", "\"s,s,1\" = \"1/8\""));
    let (code, v) = json(&["validate", "--base", &bad]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "fail");
    let failed = v["checks"].as_array().unwrap().iter().filter(|c| c["ok"] == false).count();
    assert!(failed > 2, "summary plus several violations, got {failed}");
    let (code, v) = json(&["center", "--base", &bad]);
    assert_eq!((code, v["command"].as_str().unwrap()), (1, "center"));
}

#[test]
fn parse_and_schema_errors_exit_with_two() {
    let (code, v) = json(&["validate", "--base", "/nonexistent/c.toml"]);
    assert_eq!((code, v["status"].as_str().unwrap()), (2, "error"));
    let garbled = scratch("garbled.toml", "[category\nname = ");
    assert_eq!(json(&["validate", "--base", &garbled]).0, 2);
    let missing = scratch("missing.toml", "[category]\nname = \"x\"\n");
    let (code, v) = json(&["validate", "--base", &missing]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("missing.toml"));
    assert_eq!(json(&["radical", "--base", &fixture("fib.toml")]).0, 2);
    let out = run(&["verify", "--theorem", "nonsense", "--base", &fixture("fib.toml")], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_overflow_exits_with_three() {
    let (code, v) = json(&["ordinary-center", "--base", &fixture("z5.toml"), "--node-budget", "10"]);
    assert_eq!(code, 3);
    assert!(v["error"].as_str().unwrap().contains("exceeded"));
}

#[test]
fn generalized_center_from_functor_files() {
    let (code, v) = json(&[
        "verify",
        "--theorem",
        "generalized-center",
        "--target",
        &fixture("z4.toml"),
        "--functor",
        &fixture("psi_mueger.toml"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["report"]["centralizer"], serde_json::json!([0, 2, 5, 7, 8, 10, 13, 15]));
    let (code, v) = json(&[
        "canonical-enrich",
        "--base",
        &fixture("z3.toml"),
        "--target",
        &fixture("z3.toml"),
        "--functor",
        &fixture("psi_z3_explicit.toml"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["inputs"].as_array().unwrap().len(), 3);
}

#[test]
fn json_is_byte_identical_across_runs_and_thread_counts() {
    let cases: Vec<Vec<String>> = vec![
        vec!["verify".into(), "--theorem".into(), "mtc".into(), "--base".into(), fixture("z5.toml")],
        vec!["center".into(), "--base".into(), fixture("z4.toml"), "--against-oracle".into()],
        vec!["ordinary-center".into(), "--base".into(), fixture("z4.toml")],
        vec![
            "verify".into(),
            "--theorem".into(),
            "generalized-center".into(),
            "--base".into(),
            fixture("z3.toml"),
        ],
    ];
    for case in cases {
        let mut args: Vec<&str> = case.iter().map(String::as_str).collect();
        args.extend(["--format", "json"]);
        let one = run(&args, Some(1)).stdout;
        let again = run(&args, Some(1)).stdout;
        let many = run(&args, Some(4)).stdout;
        assert!(!one.is_empty());
        assert_eq!(one, again, "{case:?}");
        assert_eq!(one, many, "{case:?}");
    }
}

#[test]
fn self_enrichment_is_emitted_as_a_table() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("fib_sharp.json");
    let (code, _) = json(&["self-enrich", "--base", &fixture("fib.toml"), "--emit", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let t: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(t.is_object());
}

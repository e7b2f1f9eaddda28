use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stratquant"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn poisson_check_passes() {
    let o = run(&["check", "poisson"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("Jacobi"));
    assert!(text.contains("Poisson ideal"));
}

#[test]
fn perturbed_algebra_exits_one_with_witness() {
    let o = run(&["check", "poisson", "--algebra", &fixture("perturbed_semicone.json"), "--json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    let props = &v["suites"][0]["properties"];
    let ideal = &props[0];
    assert_eq!(ideal["passed"], false);
    assert_eq!(ideal["counterexample"], "{x, R0} = 2*y");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["check", "nonsense"])), 2);
    assert_eq!(code(&run(&["dims", "--lmax", "4"])), 2);
    assert_eq!(code(&run(&["gram", "--s", "4", "--l", "1", "--k", "1"])), 2);
    assert_eq!(code(&run(&["reduce-sample", "--s", "1", "--l", "1", "--count", "10001"])), 2);
    assert_eq!(code(&run(&["gram", "--s", "1", "--l", "1", "--k", "1", "--csv"])), 2);
    assert_eq!(code(&run(&["check", "poisson", "--algebra", &fixture("malformed.json")])), 2);
    assert_eq!(code(&run(&["check", "poisson", "--algebra", "/nonexistent.json"])), 2);
    assert_eq!(code(&run(&["adjoint", "--z", "0"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn unsafe_bounds_lifts_the_guard() {
    let o = run(&["gram", "--s", "4", "--l", "1", "--k", "1", "--unsafe-bounds"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn dims_table() {
    let o = run(&["dims", "--lmax", "2", "--kmax", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["schema"], "stratquant/1");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r["match"] == true));
    assert!(rows.iter().filter(|r| r["s"] == 1).all(|r| r["kernel_dim"].is_null()));

    let v = json(&run(&["dims", "--lmax", "1", "--kmax", "4", "--json"]));
    let col: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["section_dim"].as_u64().unwrap()).collect();
    assert_eq!(col, [1, 1, 1, 1, 1]);
}

#[test]
fn dims_csv_and_json_agree() {
    let j = json(&run(&["dims", "--lmax", "2", "--kmax", "3", "--json"]));
    let c = String::from_utf8(run(&["dims", "--lmax", "2", "--kmax", "3", "--csv"]).stdout).unwrap();
    let mut lines = c.lines();
    assert_eq!(lines.next(), Some("s,l,k,section_dim,oracle_dim,kernel_dim,match"));
    let from_json: Vec<String> = j["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            let kd = if r["kernel_dim"].is_null() { String::new() } else { r["kernel_dim"].to_string() };
            format!("{},{},{},{},{},{},{}", r["s"], r["l"], r["k"], r["section_dim"], r["oracle_dim"], kd, r["match"])
        })
        .collect();
    assert_eq!(lines.map(str::to_string).collect::<Vec<_>>(), from_json);
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        &["dims", "--lmax", "2", "--kmax", "3", "--json"][..],
        &["reduce-sample", "--s", "2", "--l", "2", "--count", "20", "--seed", "99", "--json"],
        &["adjoint", "--count", "50", "--json"],
        &["check", "reduction", "--json"],
        &["gram", "--s", "2", "--l", "2", "--k", "2", "--json"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(code(&a), 0, "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = run(&["reduce-sample", "--s", "2", "--l", "2", "--count", "5", "--seed", "1", "--json"]);
    let b = run(&["reduce-sample", "--s", "2", "--l", "2", "--count", "5", "--seed", "2", "--json"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn reduce_sample_records() {
    let v = json(&run(&["reduce-sample", "--s", "3", "--l", "2", "--count", "10", "--json"]));
    for r in v["samples"].as_array().unwrap() {
        assert_eq!(r["muO_zero"], true);
        assert!(r["rank"].as_u64().unwrap() <= 2);
        assert_eq!(r["q"].as_array().unwrap().len(), 2);
        assert_eq!(r["W"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn adjoint_forced_vertex() {
    let o = run(&["adjoint", "--count", "1", "--z", "1", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["points"][0]["X"], "2");
    assert_eq!(v["points"][0]["Y"], "0");
    assert_eq!(v["points"][0]["tau"], "0");
    assert_eq!(v["residual_failures"], 0);
    assert_eq!(v["poisson_ideal"]["passed"], true);
    assert_eq!(v["jacobi"]["passed"], true);
    let xs: Vec<&str> = v["vertices"].as_array().unwrap().iter().map(|p| p["X"].as_str().unwrap()).collect();
    assert_eq!(xs, ["2", "-2"]);
}

#[test]
fn dirac_and_mutant() {
    let o = run(&["dirac", "--n", "2", "--max-degree", "2", "--probe-degree", "1"]);
    assert_eq!(code(&o), 0);
    let o = run(&["dirac", "--no-potential", "--json"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["passed"], false);
}

#[test]
fn gram_output() {
    let v = json(&run(&["gram", "--s", "1", "--l", "1", "--k", "1", "--json"]));
    assert_eq!(v["gram"], serde_json::json!([["8"]]));
    assert_eq!(v["positive_definite"], true);
    assert_eq!(v["basis"], serde_json::json!(["w1_1"]));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("stratquant-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dims.json");
    let o = run(&["dims", "--lmax", "1", "--kmax", "1", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "dims");
    std::fs::remove_dir_all(&dir).unwrap();
}

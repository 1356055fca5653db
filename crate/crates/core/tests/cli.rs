use std::path::{Path, PathBuf};
use std::process::Command;

use radical_lab::config::StructureConfig;
use radical_lab::radicals::ModuleAnalysis;
use radical_lab::search::{FlagEvaluator, Predicate};
use serde_json::Value;

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs").join(name)
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_radical-lab"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn members(v: &Value) -> Vec<u64> {
    v["members"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
}

#[test]
fn analyze_example_module() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("exx.json");
    let r = cli(&["analyze", config("exx.json").to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("PASS prime"));
    assert!(r.stdout.contains("FAIL completely_prime"));
    assert!(r.stdout.contains("FAIL two_primal"));
    assert!(r.stdout.contains("note: "));

    let doc = json(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["kind"], "analysis");
    let rep = &doc["report"];
    assert_eq!(rep["submodule_count"], 2);
    assert_eq!(members(&rep["beta"]), [0]);
    assert_eq!(members(&rep["beta_co"]), [0, 1, 2, 3]);
    assert_eq!(members(&rep["envelope_zero"]), [0, 1, 2, 3]);
    assert_eq!(rep["class_flags"]["satisfies_crf"]["holds"], true);
    assert_eq!(rep["class_flags"]["satisfies_rf"]["holds"], false);
    assert_eq!(rep["class_flags"]["two_primal"]["holds"], false);
    // the failing RF verdict names the zero submodule
    let w = rep["class_flags"]["satisfies_rf"]["witness"].as_array().unwrap();
    assert_eq!(w[0]["role"], "N");
    assert_eq!(doc["ring_two_primality"]["verdict"]["holds"], false);
}

#[test]
fn analyze_z4_regular() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("z4.json");
    let r = cli(&["analyze", config("z4_regular.json").to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let rep = &json(&out)["report"];
    for key in ["beta", "beta_co", "envelope_zero", "strongly_nilpotent"] {
        assert_eq!(members(&rep[key]), [0, 2], "{key}");
    }
}

#[test]
fn analyze_zero_module() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("zero.json");
    let r = cli(&["analyze", config("zero_module.json").to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rep = &json(&out)["report"];
    for key in ["beta", "beta_co", "envelope_zero", "strongly_nilpotent"] {
        assert_eq!(members(&rep[key]), [0], "{key}");
    }
    for flag in ["ifp", "symmetric", "semi_symmetric", "lee_zhou_reduced", "two_primal", "satisfies_rf", "satisfies_crf"] {
        assert_eq!(rep["class_flags"][flag]["holds"], true, "{flag}");
    }
    // the zero submodule of the zero module is not proper
    assert_eq!(rep["class_flags"]["prime"]["holds"], false);
}

#[test]
fn analyze_raw_tables() {
    let r = cli(&["analyze", config("z2xz2_tables.json").to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("4 submodules"));
}

#[test]
fn config_errors_report_a_path_and_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"ring": {"constructor": "Zn", "params": {"n": "four"}}}"#).unwrap();
    let r = cli(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("$.ring.params.n"), "{}", r.stderr);

    std::fs::write(&bad, r#"{"schema": 7, "ring": {"constructor": "Zn", "params": {"n": 4}}}"#).unwrap();
    assert_eq!(cli(&["analyze", bad.to_str().unwrap()]).code, 2);

    // multiplication that is not associative
    std::fs::write(
        &bad,
        r#"{"ring": {"tables": {"add": [[0,1],[1,0]], "mul": [[0,1],[1,1]], "one": 1}}}"#,
    )
    .unwrap();
    let r = cli(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("axiom"), "{}", r.stderr);

    assert_eq!(cli(&["analyze", "/nonexistent/file.json"]).code, 2);
}

#[test]
fn size_guard_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let big = dir.path().join("big.json");
    std::fs::write(
        &big,
        r#"{"ring": {"constructor": "matrix", "params": {"k": 3, "base": {"constructor": "Zn", "params": {"n": 4}}}}}"#,
    )
    .unwrap();
    let r = cli(&["analyze", big.to_str().unwrap()]);
    assert_eq!(r.code, 3, "{}", r.stderr);
    assert!(r.stderr.contains("size guard"));
}

#[test]
fn size_guard_reads_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_radical-lab"))
        .args(["analyze", config("u2_free.json").to_str().unwrap()])
        .env("RADICAL_LAB_MAX_SIZE", "32")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_suites_and_exit_codes() {
    let r = cli(&["verify", "example-exx-golden"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.lines().all(|l| l.starts_with("PASS")));

    let r = cli(&["verify", "thm-lt"]);
    assert_eq!(r.code, 0);

    let r = cli(&["verify", "no-such-suite"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("unknown suite"));

    let r = cli(&["verify", "all", "--catalog", config("catalog_small.json").to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stdout);
}

#[test]
fn verify_json_lists_every_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rf.json");
    let r = cli(&["verify", "thm-rf", "--json", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let doc = json(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["passed"], true);
    let suite = &doc["suites"][0];
    let outcomes = suite["outcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), suite["checks"].as_u64().unwrap() as usize);
    // one text line per (instance, check) plus the summary
    assert_eq!(r.stdout.lines().count(), outcomes.len() + 1);
}

#[test]
fn list_suites_names_all_seventeen() {
    let r = cli(&["list-suites"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().count(), 17);
    assert!(r.stdout.contains("hom-transfer"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cli(&[]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn search_finds_the_example_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("hit.json");
    let r = cli(&["search", config("search_prime_not_cp.json").to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = json(&out);
    assert_eq!(doc["status"], "found");
    assert_eq!(doc["report"]["module_size"], 4);

    // the witness document is itself an analyze config
    let text = std::fs::read_to_string(&out).unwrap();
    let (_, module) = StructureConfig::from_json(&text).unwrap().build().unwrap();
    let a = ModuleAnalysis::new(&module).unwrap();
    let pred = Predicate::parse(doc["predicate"].as_str().unwrap()).unwrap();
    assert!(FlagEvaluator::new(&a).eval(&pred).unwrap());
    assert_eq!(a.beta_co().len(), 4);

    let again = dir.path().join("again.json");
    let r = cli(&["analyze", out.to_str().unwrap(), "--json", again.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(json(&again)["report"]["class_flags"], doc["report"]["class_flags"]);
}

#[test]
fn search_absent_and_budget() {
    let r = cli(&["search", config("search_not_two_primal_zn.json").to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("no candidate"));

    let r = cli(&["search", config("search_ring_not_two_primal_zn.json").to_str().unwrap()]);
    assert_eq!(r.code, 1);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("zero.json");
    let r = cli(&[
        "search",
        config("search_prime_not_cp.json").to_str().unwrap(),
        "--budget",
        "0",
        "--json",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 3);
    let doc = json(&out);
    assert_eq!(doc["status"], "budget_exhausted");
    assert_eq!(doc["stats"]["examined"], 0);
    assert!(doc.get("ring").is_none());
}

#[test]
fn search_rejects_bad_predicates() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"predicate": "prime and shiny", "generator": {"rings": [{"ring": {"constructor": "Zn", "params": {"n": 2}}}]}}"#,
    )
    .unwrap();
    let r = cli(&["search", bad.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("shiny"));
}

#[test]
fn open_question_search_runs_without_an_expected_answer() {
    let r = cli(&["search", config("search_open_question.json").to_str().unwrap()]);
    assert!([0, 1, 3].contains(&r.code), "{}", r.stderr);
    assert!(r.stdout.contains("candidates"));
}

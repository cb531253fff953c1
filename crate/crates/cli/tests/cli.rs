mod common;

use common::{assert_valid, corpus, explab, explab_with_env};
use serde_json::json;

#[test]
fn classify_quadric_cone() {
    let run = explab(&["classify", "x^2+y^2+z^2"]);
    assert_eq!(run.code, 0);
    let r = run.json();
    assert_eq!((r["maxDuBois"].clone(), r["maxRational"].clone()), (json!(0), json!(0)));
    assert_eq!(r["alpha_tilde"], "3/2");
}

#[test]
fn classify_exit_codes() {
    let nqh = explab(&["classify", "x^3+y^3+x^2*y^2"]);
    assert_eq!(nqh.code, 2);
    assert_eq!(nqh.json()["error"], "NotQuasiHomogeneous");
    assert!(nqh.stderr.contains("NotQuasiHomogeneous"));

    let smooth = explab(&["classify", "x + y^2"]);
    assert_eq!(smooth.code, 0);
    assert_eq!(smooth.json()["alpha_tilde"], "inf");

    let syntax = explab(&["classify", "x^2 + * y"]);
    assert_eq!(syntax.code, 2);
    assert_eq!(syntax.json()["error"], "ParseError");

    let unknown = explab(&["classify", "x^2+y^3+z^2", "--vars", "x,y"]);
    assert_eq!(unknown.code, 2);
    assert_eq!(unknown.json()["error"], "ParseError");
}

#[test]
fn explicit_vars_change_the_ambient_space() {
    let r = explab(&["classify", "x^2+y^2", "--vars", "x,y"]).json();
    assert_eq!(r["alpha_tilde"], "1");
    let line = explab(&["classify", "x^2+y^2", "--vars", "x,y,z"]);
    assert_eq!(line.code, 2);
    assert_eq!(line.json()["error"], "NotIsolated");
}

#[test]
fn budget_exhaustion_is_an_internal_error() {
    let run = explab(&["classify", "x^3+x*y^3", "--budget", "0"]);
    assert_eq!(run.code, 1);
    assert_eq!(run.json()["error"], "ResourceLimit");
}

#[test]
fn config_precedence() {
    let env_budget = explab_with_env(&["classify", "x^3+x*y^3"], &[("EXPLAB_BUDGET", "0")]);
    assert_eq!(env_budget.code, 1);
    let flag_wins = explab_with_env(&["classify", "x^3+x*y^3", "--budget", "100000"], &[("EXPLAB_BUDGET", "0")]);
    assert_eq!(flag_wins.code, 0);
    let bad_env = explab_with_env(&["classify", "x^2+y^3"], &[("EXPLAB_ORDER", "nonsense")]);
    assert_eq!(bad_env.code, 2);
    let flag_over_bad_env =
        explab_with_env(&["classify", "x^2+y^3", "--order", "lex"], &[("EXPLAB_ORDER", "nonsense")]);
    assert_eq!(flag_over_bad_env.code, 0);
}

#[test]
fn orders_give_identical_reports() {
    let reports: Vec<_> = ["grevlex", "lex", "grlex"]
        .iter()
        .map(|o| explab(&["--order", o, "classify", "x^3+x*y^3+z^2"]).json())
        .collect();
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[0], reports[2]);
}

#[test]
fn table_and_csv_formats() {
    let table = explab(&["--format", "table", "classify", "x^2+y^3"]);
    assert_eq!(table.code, 0);
    assert!(table.stdout.lines().any(|l| l.starts_with("alpha_tilde") && l.trim_end().ends_with("5/6")));
    let csv = explab(&["--format", "csv", "classify", "x^2+y^3"]);
    assert!(csv.stdout.starts_with("field,value\n"));
    assert!(csv.stdout.contains("\nmilnor,2\n"));
    let diag = explab(&["--format", "csv", "classify", "x^2*y"]);
    assert_eq!(diag.code, 2);
    assert!(diag.stdout.contains("error,NotSquarefree"));
}

#[test]
fn signed_classes_twist_by_degree() {
    let plain = explab(&["classify", "x^2+y^2+z^2"]).json();
    let signed = explab(&["--signed-classes", "classify", "x^2+y^2+z^2"]).json();
    assert_eq!(plain["class"]["byDegree"]["1"], 1);
    assert_eq!(signed["class"]["byDegree"]["1"], -1);
    assert_eq!(signed["class"]["signed"], true);
}

#[test]
fn join_examples() {
    let nodes = explab(&["join", "x^2+y^2", "u^2+v^2"]).json();
    assert_eq!(nodes["bound"]["duBoisLevel"], 1);
    assert_eq!(nodes["actual"]["duBoisLevel"], 1);
    assert_eq!(nodes["verified"], true);

    let cusps = explab(&["join", "x^2+y^3", "u^2+v^3"]).json();
    assert_eq!(cusps["bound"]["duBoisLevel"], "-inf");
    assert_eq!(cusps["alpha"]["joined"], "5/3");
    assert_eq!(cusps["checks"]["convolutionMatches"], true);

    let cone = explab(&["join", "x^2+y^2+z^2", "u^2+v^2"]).json();
    assert_eq!(cone["alpha"]["joined"], "5/2");
    assert_eq!(cone["bound"]["rationalLevel"], 1);
    assert_eq!(cone["actual"]["rationalLevel"], 1);
    assert_eq!(cone["verified"], true);
}

#[test]
fn join_renames_clashing_variables() {
    let run = explab(&["join", "x^2+y^3", "x^2+y^3"]);
    assert_eq!(run.code, 0);
    let r = run.json();
    assert_eq!(r["report"]["variables"], json!(["x1", "y1", "x2", "y2"]));
    assert_eq!(r["report"]["milnor"], 4);
}

#[test]
fn join_propagates_factor_diagnostics() {
    let run = explab(&["join", "x^2*y", "u^2+v^2"]);
    assert_eq!(run.code, 2);
    assert_eq!(run.json()["error"], "NotSquarefree");
}

#[test]
fn spectrum_of_a_union() {
    let r = explab(&["spectrum", "x^2+y^3", "x^2+y^2"]).json();
    assert_eq!(r["class"]["points"], json!(["p0", "p1"]));
    assert_eq!(r["class"]["byDegree"], json!({"0": 1, "1": 2}));
    assert_eq!(r["class"]["unipotent"], json!({"1": 1}));
    assert_eq!(r["class"]["ordTs"], "6");
    let mixed = explab(&["spectrum", "x^2+y^3", "x^2+y^2+z^2"]);
    assert_eq!(mixed.code, 2);
    assert_eq!(mixed.json()["error"], "VariableMismatch");
}

#[test]
fn ade_batch_agrees() {
    let run = explab(&["batch", corpus("ade.jsonl").to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let s = run.json();
    assert_eq!(s["entries"], 9);
    assert_eq!(s["classified"], 9);
    assert_eq!(s["routeFailures"], 0);
    let results = s["results"].as_array().unwrap();
    assert!(results.iter().all(|r| r["routesAgree"] == true));
}

#[test]
fn batch_is_independent_of_jobs() {
    let path = corpus("acceptance.jsonl");
    let path = path.to_str().unwrap();
    let one = explab(&["batch", path, "--jobs", "1"]);
    for jobs in ["2", "4", "8"] {
        let many = explab(&["batch", path, "--jobs", jobs]);
        assert_eq!(one.stdout, many.stdout, "--jobs {jobs}");
        assert_eq!(one.code, many.code);
    }
}

#[test]
fn pinned_wrong_milnor_fails_and_names_entry() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pins.jsonl");
    std::fs::write(
        &path,
        "{\"id\": \"cusp\", \"polynomial\": \"x^2+y^3\", \"expected\": {\"milnor\": 2}}\n\
         {\"id\": \"wrong-e6\", \"polynomial\": \"x^3+y^4\", \"expected\": {\"milnor\": 7}}\n",
    )
    .unwrap();
    let run = explab(&["batch", path.to_str().unwrap()]);
    assert_ne!(run.code, 0);
    assert_eq!(run.code, 3);
    assert!(run.stderr.contains("wrong-e6"));
    let s = run.json();
    assert_eq!(s["pinFailures"], json!([{"id": "wrong-e6", "mismatches": ["milnor: expected 7, got 6"]}]));
}

#[test]
fn empty_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.jsonl");
    std::fs::write(&path, "\n\n").unwrap();
    let run = explab(&["batch", path.to_str().unwrap()]);
    assert_eq!(run.code, 0);
    assert_eq!(run.json()["entries"], 0);
}

#[test]
fn corpus_errors() {
    let missing = explab(&["batch", "/definitely/not/here.jsonl"]);
    assert_eq!(missing.code, 2);
    assert_eq!(missing.json()["error"], "CorpusError");

    let dir = tempfile::tempdir().unwrap();
    let dup = dir.path().join("dup.jsonl");
    std::fs::write(&dup, "{\"id\": \"a\", \"polynomial\": \"x^2\"}\n{\"id\": \"a\", \"polynomial\": \"x^3\"}\n")
        .unwrap();
    let run = explab(&["batch", dup.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.json()["message"].as_str().unwrap().contains("duplicate id"));
}

#[test]
fn batch_out_dir_writes_one_file_per_entry() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("reports");
    let run = explab(&["batch", corpus("diagnostics.jsonl").to_str().unwrap(), "--out-dir", out.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let s = run.json();
    assert_valid("batch", &s);
    assert!(s["results"].as_array().unwrap().iter().all(|r| r.get("report").is_none()));

    let mut files: Vec<_> =
        std::fs::read_dir(&out).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    files.sort();
    assert_eq!(files, ["line.json", "node.json", "nonqh.json", "nonreduced.json", "smooth.json"]);
    let node: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("node.json")).unwrap()).unwrap();
    assert_valid("report", &node);
    let nonqh: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("nonqh.json")).unwrap()).unwrap();
    assert_valid("diagnostic", &nonqh);
}

#[test]
fn schema_verb() {
    let list = explab(&["schema"]);
    assert!(list.stdout.lines().any(|l| l == "report"));
    let report = explab(&["schema", "report"]).json();
    assert_eq!(report["$id"], "explab/report.json");
    assert_eq!(explab(&["schema", "nope"]).code, 2);
}

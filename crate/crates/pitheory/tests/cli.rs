use std::path::Path;
use std::process::{Command, Output};

use pitheory::ReportDocument;
use pitheory_core::lab::Outcome;

fn pitheory(args: &[&str]) -> Output {
    pitheory_with_env(args, &[])
}

fn pitheory_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pitheory"));
    cmd.args(args);
    for var in pitheory::config::CAP_ENV.iter().map(|(_, v)| *v).chain([pitheory::config::CONFIG_ENV]) {
        cmd.env_remove(var);
    }
    cmd.envs(env.iter().copied());
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn document(o: &Output) -> ReportDocument {
    ReportDocument::read_structured(&o.stdout[..]).unwrap()
}

const A4: &str = "group A4\ndegree 4\ngen (1 2 3)\ngen (1 2)(3 4)\nend\n";
const S3: &str = "group S3\ndegree 3\ngen (1 2)\ngen (1 2 3)\nend\n";

#[test]
fn check_pi_false_is_still_success() {
    let dir = tempfile::tempdir().unwrap();
    let a4 = write(dir.path(), "a4.group", A4);
    let o = pitheory(&["check-pi", &a4, "(1 2)(3 4)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("false\n"), "{out}");
    assert!(out.contains("1 examined"));
    assert!(out.contains("|D| = 2, |G : N(D)| = 3, pi(D) = {2}, fails"));
}

#[test]
fn check_pi_true_prints_the_witness() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write(dir.path(), "s3.group", S3);
    let o = pitheory(&["check-pi", &s3, "(1 2)", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["witness"]["series_orders"], serde_json::json!([1, 3, 6]));
    assert_eq!(v["witness"]["per_factor"].as_array().unwrap().len(), 2);

    let o = pitheory(&["check-pi", &s3]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("true\nH = 1 (order 1)"));
}

#[test]
fn check_pi_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let a4 = write(dir.path(), "a4.group", A4);
    let o = pitheory(&["check-pi", &a4, "(1 2)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("(1 2) is not an element of A4"));

    let o = pitheory(&["check-pi", &a4, "(1 2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("column 1: unclosed cycle"), "{}", stderr(&o));

    let bad = write(dir.path(), "bad.group", "group X\ndegree 3\ngen (1 2 3\nend\n");
    let o = pitheory(&["check-pi", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3, column 5: unclosed cycle"), "{}", stderr(&o));

    let o = pitheory(&["check-pi", "/nonexistent/x.group"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn crlf_group_files() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write(dir.path(), "s3.group", &S3.replace('\n', "\r\n"));
    let o = pitheory(&["check-pi", &s3, "(1 2 3)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("true"));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(pitheory(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(pitheory(&["verify", "--format", "xml"]).status.code(), Some(1));
    assert_eq!(pitheory(&["verify", "--theorem", "lemma:nonsense"]).status.code(), Some(1));
    assert_eq!(pitheory(&["verify", "--group", "NoSuchGroup"]).status.code(), Some(1));
    let help = pitheory(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("check-pi"));
}

#[test]
fn verify_theorem_b_on_the_builtin_corpus() {
    let o = pitheory(&["verify", "--theorem", "B", "--p", "2", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = document(&o);
    let cases = |name: &str| doc.reports.iter().find(|r| r.group_name == name).unwrap().conclusion_cases.clone();
    assert!(cases("SL(2,3)").contains(&"4".to_string()));
    assert_eq!(cases("Alt5"), ["3"]);
    assert!(cases("Alt4").contains(&"2".to_string()));
    assert_eq!(doc.summary.fail, 0);
    assert_eq!(doc.summary.total(), doc.reports.len());
}

#[test]
fn verify_theorem_c_at_d_4() {
    let o = pitheory(&["verify", "--theorem", "C", "--p", "2", "--d", "4", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = document(&o);
    let r = doc.reports.iter().find(|r| r.group_name == "C2^4:C3-diagonal").unwrap();
    assert_eq!(r.outcome, Outcome::Pass);
    for (k, v) in [("k", "2"), ("m", "4"), ("n", "2")] {
        assert_eq!(r.facts[k], v);
    }
    // Groups whose Sylow 2-subgroup is too small for d = 4 are skipped.
    assert!(!doc.reports.iter().any(|r| r.group_name == "Alt4"));
}

#[test]
fn empty_corpus_directory() {
    let dir = tempfile::tempdir().unwrap();
    let o = pitheory(&["verify", dir.path().to_str().unwrap(), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = document(&o);
    assert!(doc.reports.is_empty());
    assert_eq!(doc.summary.total(), 0);
}

#[test]
fn exit_codes_distinguish_fail_and_indeterminate() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "big.group", "group Sym5\nconstruct sym:5\nend\n");
    let o = pitheory(&["verify", dir.path().to_str().unwrap(), "--theorem", "A", "--closure-cap", "100"]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    assert!(stdout(&o).contains("indeterminate"));

    write(dir.path(), "broken.group", "group Broken\nconstruct sdp:2:2:1,1,1,1:3\nend\n");
    let o = pitheory(&["verify", dir.path().to_str().unwrap(), "--theorem", "A", "--closure-cap", "100"]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
}

#[test]
fn caps_come_from_env_and_flags() {
    let o = pitheory_with_env(&["check-pi", "builtin:Sym4"], &[("PITHEORY_CLOSURE_CAP", "10")]);
    assert_eq!(o.status.code(), Some(3));
    let o = pitheory_with_env(
        &["verify", "--group", "Alt4", "--theorem", "A", "--lattice-cap", "99", "--format", "structured"],
        &[("PITHEORY_LATTICE_CAP", "10"), ("PITHEORY_ISO_CAP", "77")],
    );
    assert_eq!(o.status.code(), Some(0));
    let doc = document(&o);
    assert_eq!((doc.caps.lattice, doc.caps.iso), (99, 77));
    let o = pitheory_with_env(&["list"], &[("PITHEORY_SERIES_CAP", "lots")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn config_file_sets_caps() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "caps.toml", "[caps]\nmodule_dim = 6\n");
    let o = pitheory(&["verify", "--group", "Alt4", "--theorem", "A", "--config", &cfg, "--format", "structured"]);
    assert_eq!(document(&o).caps.module_dim, 6);
}

#[test]
fn output_is_deterministic() {
    let args =
        ["verify", "--group", "SL(2,3)", "--group", "C2^4:C3-diagonal", "--group", "Alt5", "--format", "structured"];
    let a = pitheory(&args);
    let b = pitheory(&args);
    let mut one_thread = args.to_vec();
    one_thread.extend(["--threads", "1"]);
    let c = pitheory(&one_thread);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(!stdout(&a).contains("timing_us"));
    let timed = pitheory(&["verify", "--group", "Alt4", "--theorem", "A", "--timing", "--format", "structured"]);
    assert!(document(&timed).reports.iter().all(|r| r.timing_us.is_some()));
}

#[test]
fn info_reports_structure() {
    let o = pitheory(&["info", "builtin:Sym4", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 24);
    assert_eq!(v["chief_factor_orders"], serde_json::json!([4, 3, 2]));
    let p2 = &v["primes"][0];
    assert_eq!((p2["p"].as_u64(), p2["p_length"].as_u64()), (Some(2), Some(2)));
    let o = pitheory(&["info", "builtin:Alt5", "--p", "2"]);
    assert!(stdout(&o).contains("p-soluble false"));
}

#[test]
fn exported_corpus_verifies_like_the_builtin_one() {
    let dir = tempfile::tempdir().unwrap();
    let o = pitheory(&["export-corpus", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let n = pitheory_core::lab::builtin_corpus().len();
    assert_eq!(stdout(&o).lines().count(), n);

    let args = ["verify", "--theorem", "A", "--theorem", "B", "--format", "structured"];
    let mut from_dir = args.to_vec();
    from_dir.push(dir.path().to_str().unwrap());
    let exported = pitheory(&from_dir);
    let builtin = pitheory(&args);
    assert_eq!(exported.status.code(), Some(0));
    assert_eq!(exported.stdout, builtin.stdout);
}

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

fn wcnest(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wcnest"))
        .args(args)
        .env_remove("WCNEST_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn answer_sets_of_choice() {
    let o = wcnest(&["answer-sets", &data("choice.wc")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{}\n{a}\n{b}\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn nested_semantics_by_extension() {
    let o = wcnest(&["answer-sets", &data("excluded_middle.lp")]);
    assert_eq!(stdout(&o), "{}\n{a}\n");
    let o = wcnest(&["answer-sets", "--semantics", "nested", &data("double_negation.lp")]);
    assert_eq!(stdout(&o), "{}\n{a}\n");
}

#[test]
fn no_answer_sets_exits_one() {
    let o = wcnest(&["answer-sets", &data("falsum.wc")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "");
}

#[test]
fn parse_error_exits_two_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.wc");
    std::fs::write(&path, "a :- .\n1 <= {a=-1}.\n").unwrap();
    let o = wcnest(&["answer-sets", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "");
    assert!(stderr(&o).starts_with("error: "), "{}", stderr(&o));
}

#[test]
fn missing_file_exits_two() {
    let o = wcnest(&["answer-sets", "/nonexistent/file.wc"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_wcnest"))
        .args(["answer-sets", &data("choice.wc")])
        .env("WCNEST_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = wcnest(&["answer-sets", "--cap", "1", &data("choice.wc")]);
    assert_eq!(o.status.code(), Some(2));
    let o = wcnest(&["answer-sets", "--cap", "0", &data("choice.wc")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn records_format() {
    let o = wcnest(&["answer-sets", "--format", "records", &data("choice.wc")]);
    assert_eq!(
        stdout(&o),
        "type=answer_set index=0 size=0 literals=\n\
         type=answer_set index=1 size=1 literals=a\n\
         type=answer_set index=2 size=1 literals=b\n\
         type=summary count=3\n"
    );
}

#[test]
fn translate_modes() {
    let o = wcnest(&["translate", "--mode", "basic", "--simplify", &data("choice.wc")]);
    assert_eq!(stdout(&o), "(a; not a), (b; not b), not (a, b).\n");
    let o = wcnest(&["translate", "--mode", "nd", &data("choice.wc")]);
    assert_eq!(
        stdout(&o),
        "a :- not not a.\nb :- not not b.\nbot :- not ((top; a; b; a, b), not (a, b)).\n"
    );
    let o = wcnest(&["translate", "--mode", "nn", &data("choice.wc")]);
    assert_eq!(stdout(&o), golden("choice_nn.lp"));
}

#[test]
fn translate_report() {
    let o = wcnest(&["translate", "--mode", "nn", "--report", &data("choice.wc")]);
    let out = stdout(&o);
    assert!(out.contains("% rules: 12\n"), "{out}");
    assert!(out.contains("% weight atoms: 6\n"), "{out}");
    assert!(out.contains("% constraint 1: L=2 W=2\n"), "{out}");
}

#[test]
fn translate_reserved_prefix_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reserved.wc");
    std::fs::write(&path, "q_x.\n").unwrap();
    let o = wcnest(&["translate", "--mode", "nn", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn strong_equivalence_verdicts() {
    let o = wcnest(&["check-equiv", "--strong", &data("exactly_one.wc"), &data("constraint.wc")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "equivalent\n");
    let o = wcnest(&["check-equiv", &data("excluded_middle.lp"), &data("double_negation.lp")]);
    assert_eq!(o.status.code(), Some(0));
    let o = wcnest(&["check-equiv", &data("fact.wc"), &data("facts.wc")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn weak_equivalence_counterexample() {
    let o = wcnest(&["check-equiv", "--weak", &data("fact.wc"), &data("facts.wc")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not equivalent\n"));
    let o = wcnest(&[
        "check-equiv",
        "--weak",
        "--format",
        "records",
        &data("exactly_one.wc"),
        &data("constraint.wc"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("type=verdict strength=weak equivalent=true"), "{}", stdout(&o));
}

#[test]
fn completion_goldens() {
    let dir = tempfile::tempdir().unwrap();
    for (src, gold) in [("choice.wc", "choice.dimacs"), ("weighted.wc", "weighted.dimacs")] {
        let path = dir.path().join(gold);
        let o = wcnest(&["completion", &data(src), "--dimacs", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(std::fs::read_to_string(&path).unwrap(), golden(gold));
    }
    let o = wcnest(&["completion", &data("choice.wc")]);
    assert_eq!(stdout(&o), golden("choice.dimacs"));
}

#[test]
fn completion_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.cnf");
    let o = wcnest(&["completion", "--verify", &data("weighted.wc"), "--dimacs", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "verify pass: 2 models, 2 answer sets\n");
}

#[test]
fn non_tight_completion_exits_three() {
    for f in ["cycle.lp", "self_support.wc"] {
        let o = wcnest(&["completion", &data(f)]);
        assert_eq!(o.status.code(), Some(3), "{f}");
        assert_eq!(stdout(&o), "");
    }
}

#[test]
fn verify_reports_and_is_deterministic() {
    let args = ["verify", "--theorem", "1", "--cases", "50", "--seed", "7", "--format", "records"];
    let a = wcnest(&args);
    let b = wcnest(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        stdout(&a),
        "type=check name=theorem-1 seed=7 cases=50 passed=50 failed=0 skipped=0\n"
    );
}

#[test]
fn verify_lemma_and_proposition() {
    let o = wcnest(&["verify", "--lemma", "8", "--cases", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let o = wcnest(&["verify", "--proposition", "3", "--cases", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let o = wcnest(&["verify", "--theorem", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

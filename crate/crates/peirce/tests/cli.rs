//! Command-line behavior: output formats, the exit-code contract
//! (0 success, 2 usage/parse, 3 proof error, 4 verification failure), and
//! file round trips.

mod common;

use common::{golden_path, run_cli};

#[test]
fn parse_prints_desugared_rendering() {
    let (code, stdout, _) = run_cli(&["parse", "p \\/ q"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "(p -> q) -> q");

    let (code, stdout, _) = run_cli(&["parse", "p -> q -> r"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "p -> q -> r");
}

#[test]
fn parse_reports_errors_with_position() {
    let (code, _, stderr) = run_cli(&["parse", "(p ->"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unbalanced parenthesis"), "{stderr}");

    let (code, _, stderr) = run_cli(&["parse", "p ->"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("offset 4"), "{stderr}");

    let (code, _, _) = run_cli(&["taut", "p ->"]);
    assert_eq!(code, 2);
}

#[test]
fn taut_verdicts() {
    let (code, stdout, _) = run_cli(&["taut", "p->p"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "tautology");

    let (code, stdout, _) = run_cli(&["taut", "(p->q)->q"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "countervaluation p=0 q=0");
}

#[test]
fn check_golden_identity_and_gating() {
    let (code, stdout, _) = run_cli(&["check", &golden_path("identity.prf"), "--basis", "K,S"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "⊢ p -> p");

    let (code, _, stderr) = run_cli(&["check", &golden_path("identity.prf"), "--basis", "K"]);
    assert_eq!(code, 3);
    assert_eq!(stderr.trim(), "axiom scheme S not in basis at step 1");
}

#[test]
fn check_rejects_forward_references() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("forward.prf");
    std::fs::write(
        &path,
        "basis: K S\nhyp 1: p\n1. p  hyp 1\n2. q  mp 3 1\n3. p -> q -> p  ax K A=p B=q\n",
    )
    .unwrap();
    let (code, _, stderr) = run_cli(&["check", &path.to_string_lossy()]);
    assert_eq!(code, 3);
    assert_eq!(stderr.trim(), "step 2 references step 3");
}

#[test]
fn check_usage_errors() {
    let (code, _, _) = run_cli(&["check", "/nonexistent/file.prf"]);
    assert_eq!(code, 2);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.prf");
    std::fs::write(&path, "basis: K S\n1. p  zap 1\n").unwrap();
    let (code, _, stderr) = run_cli(&["check", &path.to_string_lossy()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown justification"), "{stderr}");

    let (code, _, stderr) =
        run_cli(&["check", &golden_path("identity.prf"), "--basis", "K,S,Nope"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown axiom scheme"), "{stderr}");
}

#[test]
fn prove_writes_files_that_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oe.prf");
    let path_str = path.to_string_lossy().into_owned();
    let (code, stdout, _) = run_cli(&[
        "prove", "or-elim", "--A", "p", "--B", "q", "--Q", "r", "-o", &path_str,
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "p -> r, q -> r ⊢ ((p -> q) -> q) -> r");
    let (code, _, _) = run_cli(&["check", &path_str, "--basis", "K,S,P"]);
    assert_eq!(code, 0);

    // Without --out the proof goes to stdout and the judgment to stderr.
    let (code, stdout, stderr) = run_cli(&["prove", "identity", "--A", "p -> q"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 6); // basis line + 5 steps
    assert!(stdout.starts_with("basis: K S\n"));
    assert_eq!(stderr.trim(), "⊢ (p -> q) -> p -> q");
}

#[test]
fn prove_t4_reverse_gates_on_vee_e() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t4.prf");
    let path_str = path.to_string_lossy().into_owned();
    let (code, _, _) = run_cli(&[
        "prove",
        "t4-reverse",
        "--A",
        "p",
        "--B",
        "q",
        "-o",
        &path_str,
    ]);
    assert_eq!(code, 0);
    let (code, _, _) = run_cli(&["check", &path_str, "--basis", "K,S+VE"]);
    assert_eq!(code, 0);
    let (code, _, _) = run_cli(&["check", &path_str, "--basis", "K,S"]);
    assert_eq!(code, 3);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(!text.contains("ax P "), "no Peirce axiom expected");
    assert_eq!(text.matches(" ve ").count(), 1);
}

#[test]
fn prove_usage_errors() {
    let (code, _, stderr) = run_cli(&["prove", "nonsense", "--A", "p"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown theorem"), "{stderr}");

    let (code, _, stderr) = run_cli(&["prove", "hs", "--A", "p", "--B", "q"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("requires --C"), "{stderr}");

    let (code, _, _) = run_cli(&["prove", "identity", "--A", "p ->"]);
    assert_eq!(code, 2);
}

#[test]
fn discharge_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("mp.prf");
    std::fs::write(
        &input,
        "basis: K S\nhyp 1: p -> q\nhyp 2: p\n1. p -> q  hyp 1\n2. p  hyp 2\n3. q  mp 1 2\n",
    )
    .unwrap();
    let input_str = input.to_string_lossy().into_owned();

    let out = dir.path().join("discharged.prf");
    let out_str = out.to_string_lossy().into_owned();
    let (code, stdout, _) = run_cli(&["discharge", &input_str, "p", "-o", &out_str]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "p -> q ⊢ p -> q");
    let (code, stdout, _) = run_cli(&["check", &out_str]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "p -> q ⊢ p -> q");

    // Vacuous discharge keeps the hypotheses and prepends the implication.
    let (code, stdout, _) = run_cli(&["discharge", &input_str, "r", "-o", &out_str]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "p -> q, p ⊢ r -> q");
}

#[test]
fn discharge_rejects_vee_e_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ve.prf");
    std::fs::write(
        &input,
        "basis: K S +VE\nhyp 1: p -> p\nhyp 2: q -> p\n1. p -> p  hyp 1\n2. q -> p  hyp 2\n\
         3. ((p -> q) -> q) -> p  ve 1 2 A=p B=q Q=p\n",
    )
    .unwrap();
    let (code, _, stderr) = run_cli(&["discharge", &input.to_string_lossy(), "q -> p"]);
    assert_eq!(code, 3);
    assert_eq!(stderr.trim(), "cannot discharge across primitive ∨E");
}

#[test]
fn poset_summaries_and_exit_codes() {
    let (code, stdout, _) = run_cli(&["poset", "--vars", "1", "--depth", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("classes: 2"), "{stdout}");
    assert!(
        stdout.contains("top: c1 [p -> p] (unique maximum)"),
        "{stdout}"
    );

    let (code, stdout, _) = run_cli(&["poset", "--vars", "2", "--depth", "3"]);
    assert_eq!(code, 0);
    assert!(
        stdout.contains("sup = [(A->B)->B] verified for 36 pairs (6^2); violations: 0"),
        "{stdout}"
    );

    let (code, _, stderr) = run_cli(&["poset", "--vars", "30", "--depth", "9"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("exceeds"), "{stderr}");

    // A depth-0 universe with two variables has no join classes at all.
    let (code, stdout, _) = run_cli(&["poset", "--vars", "2", "--depth", "0"]);
    assert_eq!(code, 4);
    assert!(stdout.contains("violation"), "{stdout}");
}

#[test]
fn poset_writes_dot_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("h.dot");
    let json = dir.path().join("r.json");
    let (code, _, _) = run_cli(&[
        "poset",
        "--vars",
        "1",
        "--depth",
        "2",
        "--dot",
        &dot.to_string_lossy(),
        "--json",
        &json.to_string_lossy(),
    ]);
    assert_eq!(code, 0);
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(
        dot_text,
        "digraph lindenbaum {\n  rankdir=BT;\n  c0 [label=\"p\"];\n  c1 [label=\"p -> p\"];\n  c0 -> c1;\n}\n"
    );
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(parsed["universe"]["formula_count"], 5);
    assert_eq!(parsed["classes"][1]["truth_table"], "11");
    assert_eq!(parsed["top_bottom"]["top_class"], 1);
}

#[test]
fn verify_constructions_passes_and_reports() {
    let (code, stdout, _) = run_cli(&["verify"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("Peirce-free"), "{stdout}");
    assert!(stdout.contains("or-intro-right"), "{stdout}");
    assert!(stdout.contains("axioms used: {K}"), "{stdout}");
    assert!(
        stdout.contains("lindenbaum (2 vars, depth 3): 6 classes"),
        "{stdout}"
    );
}

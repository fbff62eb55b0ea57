//! End-to-end tests of the command line binary: determinism, exit codes,
//! and the documented output formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_specforms"))
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.form"))
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

#[test]
fn catalog_lists_names() {
    let listing = stdout(&["catalog"]);
    for name in ["g2", "spin7", "omega10", "phiB", "psi12-A"] {
        assert!(listing.lines().any(|l| l == name), "missing {name}");
    }
}

#[test]
fn catalog_emits_form_text() {
    let text = stdout(&["catalog", "g2"]);
    assert!(text.starts_with("dim 7\ndeg 3\n"));
    assert!(text.contains("+1 1 2 7"));
    assert!(text.contains("-1 1 3 6"));
}

#[test]
fn zero_ten_flag_changes_display_only() {
    let plain = stdout(&["catalog", "omega10"]);
    assert!(plain.contains("+1 1 2 3 4 9 10"));
    let zeroed = stdout(&["--zero-ten", "catalog", "omega10"]);
    assert!(zeroed.contains("+1 1 2 3 4 9 0"));
}

#[test]
fn symmetries_output_is_deterministic() {
    let args = ["symmetries", &fixture("g2"), "--orthogonal", "--commutator", "--json"];
    let first = stdout(&args);
    let second = stdout(&args);
    assert_eq!(first, second);
    let doc: serde_json::Value = serde_json::from_str(&first).expect("json");
    assert_eq!(doc["permutation"]["symmetry_order"], 21);
    assert_eq!(doc["orthogonal"]["symmetry_order"], 1344);
}

#[test]
fn charpoly_prints_factored_form_on_fixture_match() {
    let out = stdout(&["charpoly", &fixture("epsilon-4"), "--k", "2"]);
    assert_eq!(out.trim(), "(λ^2 - 1)^3");
    let json = stdout(&["charpoly", &fixture("kahler-2"), "--k", "1", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).expect("json");
    assert_eq!(doc["matrix_size"], 4);
    assert_eq!(doc["antisymmetric"], true);
}

#[test]
fn construct_z5_lift_reproduces_sixform() {
    let built = stdout(&["construct", "--scheme", "Z5", "--source", &fixture("spin7")]);
    let reference = std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/omega10.form"),
    )
    .expect("fixture");
    assert_eq!(built, reference);
}

#[test]
fn construct_scheme_a_with_spec_file() {
    let dir = std::env::temp_dir().join("specforms-test-scheme-a");
    std::fs::create_dir_all(&dir).expect("tempdir");
    let seeds = dir.join("seed.form");
    std::fs::write(&seeds, "dim 7\ndeg 3\n+1 1 2 7\n").expect("write");
    let spec = dir.join("embed.spec");
    std::fs::write(&spec, "target-dim 7\ngen (1 2 5 4 6 7 3)\n").expect("write");
    let out = stdout(&[
        "construct",
        "--scheme",
        "A",
        "--source",
        &seeds.to_string_lossy(),
        "--spec",
        &spec.to_string_lossy(),
    ]);
    let reference = std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/g2.form"),
    )
    .expect("fixture");
    assert_eq!(out, reference);
}

#[test]
fn construct_scheme_c_lifts_kahler_to_g2() {
    let dir = std::env::temp_dir().join("specforms-test-scheme-c");
    std::fs::create_dir_all(&dir).expect("tempdir");
    let spec = dir.join("embed.spec");
    std::fs::write(&spec, "target-dim 7\nslots 7\ngen (1 2 5 4 6 7 3)\n").expect("write");
    let out = stdout(&[
        "construct",
        "--scheme",
        "C",
        "--source",
        &fixture("kahler-3"),
        "--spec",
        &spec.to_string_lossy(),
    ]);
    let reference = std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/g2.form"),
    )
    .expect("fixture");
    assert_eq!(out, reference);
}

#[test]
fn contract_slot_plane_recovers_spin7() {
    let out = stdout(&["contract", &fixture("omega10"), "9", "10"]);
    let reference = std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/spin7.form"),
    )
    .expect("fixture");
    assert_eq!(out, reference);
}

#[test]
fn hodge_wedge_restrict_roundtrip() {
    let starred = stdout(&["hodge", &fixture("g2")]);
    assert!(starred.starts_with("dim 7\ndeg 4\n"));
    let wedged = stdout(&["wedge", &fixture("kahler-3"), &fixture("kahler-3")]);
    assert!(wedged.contains("+2 1 2 3 4"));
    let restricted = stdout(&["restrict", &fixture("kahler-3"), "1", "2"]);
    assert_eq!(restricted, "dim 2\ndeg 2\n+1 1 2\n");
}

#[test]
fn invariants_classify_table_rows() {
    let dir = std::env::temp_dir().join("specforms-test-invariants");
    std::fs::create_dir_all(&dir).expect("tempdir");
    let b2 = dir.join("b2.form");
    std::fs::write(&b2, "dim 4\ndeg 2\n+1 1 2\n+1 3 4\n").expect("write");
    let out = stdout(&["invariants", &b2.to_string_lossy()]);
    assert!(out.contains("I1 = -4"));
    assert!(out.contains("I2 = 8"));
    assert!(out.contains("class B2"));
}

#[test]
fn table1_renders_all_rows() {
    let out = stdout(&["table1"]);
    for label in ["A", "B1", "D3", "F4"] {
        assert!(out.lines().any(|l| l.starts_with(label)), "missing {label}");
    }
    let json = stdout(&["table1", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).expect("json");
    assert_eq!(doc.as_array().expect("array").len(), 19);
}

#[test]
fn graph_profile_of_spin7() {
    let out = stdout(&["graph", &fixture("spin7")]);
    assert!(out.contains("14 vertices"));
    assert!(out.contains("d2:12, d4:1"));
}

#[test]
fn verify_paper_appendix_passes_and_exits_zero() {
    let out = run(&["verify-paper", "--section", "A"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 failed"));
}

#[test]
fn verify_paper_section_six_reports_failures_and_exits_one() {
    let out = run(&["verify-paper", "--section", "6"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[FAIL]"));
    assert!(text.contains("245760"));
}

#[test]
fn exit_codes_for_errors() {
    // parse error → 2
    let dir = std::env::temp_dir().join("specforms-test-errors");
    std::fs::create_dir_all(&dir).expect("tempdir");
    let bad = dir.join("bad.form");
    std::fs::write(&bad, "dim x\n").expect("write");
    let out = run(&["hodge", &bad.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));
    // search bound → 3
    let wide = dir.join("wide.form");
    std::fs::write(&wide, "dim 13\ndeg 2\n+1 1 2\n").expect("write");
    let out = run(&["symmetries", &wide.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(3));
    // degenerate plane → 1
    let out = run(&["contract", &fixture("spin7"), "2", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

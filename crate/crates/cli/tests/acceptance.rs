//! Acceptance suite: runs every recorded reference claim, printing one line
//! per claim and asserting each criterion. The expected values are pinned
//! here through the verification harness; failures print the exact computed
//! value alongside the recorded one.
//!
//! Six criteria contain claims whose recorded values do not survive exact
//! recomputation (orthogonal stabilizer counts recorded at half size, the
//! dual spectrum written in the opposite orientation, one impossible graph
//! profile, and the 17-component form paired with the polynomial of a
//! different contraction class). Those claims fail here with the computed
//! truth in the message; surfacing them is what the harness is for.

use specforms_cli::verify::{run_criterion, Claim};

fn run(criterion: u8) {
    let claims = run_criterion(criterion);
    assert!(!claims.is_empty(), "criterion {criterion} has claims");
    for c in &claims {
        println!(
            "criterion {:02} [{}] {}: expected {} | computed {}",
            c.criterion,
            if c.pass { "PASS" } else { "FAIL" },
            c.id,
            c.expected,
            c.computed
        );
    }
    let failing: Vec<&Claim> = claims.iter().filter(|c| !c.pass).collect();
    assert!(
        failing.is_empty(),
        "criterion {criterion}: {} of {} claims failed:\n{}",
        failing.len(),
        claims.len(),
        failing
            .iter()
            .map(|c| format!(
                "  {}: expected {}, computed {}{}",
                c.id,
                c.expected,
                c.computed,
                c.note
                    .as_ref()
                    .map(|n| format!(" ({n})"))
                    .unwrap_or_default()
            ))
            .collect::<Vec<_>>()
            .join("\n")
    );
}

#[test]
fn criterion_01_g2_censuses() {
    run(1);
}

#[test]
fn criterion_02_spin7_censuses() {
    run(2);
}

#[test]
fn criterion_03_kahler_censuses() {
    run(3);
}

#[test]
fn criterion_04_sixform_construction() {
    run(4);
}

#[test]
fn criterion_05_spectra() {
    run(5);
}

#[test]
fn criterion_06_stabilizer_dimensions() {
    run(6);
}

#[test]
fn criterion_07_su2_reduction() {
    run(7);
}

#[test]
fn criterion_08_complex_family() {
    run(8);
}

#[test]
fn criterion_09_twelve_dimensional_lifts() {
    run(9);
}

#[test]
fn criterion_10_classifier_table() {
    run(10);
}

#[test]
fn criterion_11_graph_profiles() {
    run(11);
}

#[test]
fn criterion_12_presentations_and_embeddings() {
    run(12);
}

#[test]
fn criterion_13_property_suites() {
    run(13);
}

//! Fixture files: every catalog form ships in the text format for
//! cross-implementation testing. These tests pin the files against the
//! catalog and the parser against the writer.

use std::fs;
use std::path::PathBuf;

use specforms::construct::{catalog, catalog_names};
use specforms::Form;

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.form"))
}

#[test]
fn fixtures_match_catalog() {
    for name in catalog_names() {
        let path = fixture_path(name);
        let text = fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("missing fixture {}: {e}", path.display()));
        let parsed = Form::parse_text(&text).expect("fixture parses");
        let built = catalog(name).expect("catalog builds");
        assert_eq!(parsed, built, "fixture {name} drifted from the catalog");
        // bit-exact round trip
        assert_eq!(parsed.to_text(), text, "fixture {name} is not in canonical text form");
    }
}

#[test]
fn fixture_components_spot_checks() {
    let omega = Form::parse_text(&fs::read_to_string(fixture_path("omega10")).unwrap()).unwrap();
    assert_eq!(omega.weight(), 50);
    assert_eq!(omega.component(&[1, 2, 3, 5, 8, 10]), -1);
    let g2 = Form::parse_text(&fs::read_to_string(fixture_path("g2")).unwrap()).unwrap();
    assert_eq!(g2.weight(), 7);
    assert_eq!(g2.component(&[1, 2, 7]), 1);
    assert_eq!(g2.component(&[1, 6, 3]), 1);
    let t = Form::parse_text(&fs::read_to_string(fixture_path("t17")).unwrap()).unwrap();
    assert_eq!(t.weight(), 17);
    assert_eq!(t.component(&[1, 6, 7, 8]), -1);
}

use proptest::prelude::*;

use isotype::error::CliError;
use isotype::spec::{parse_spec, parse_spec_str, AlgSpec};

const SL2: &str = include_str!("../../../specs/sl2.alg.json");

fn with_bracket_constant(c: &str) -> String {
    SL2.replacen(r#"{ "i": 0, "j": 2, "k": 1, "c": "1" }"#, c, 1)
}

#[test]
fn shipped_specs_parse() {
    for name in ["sl2.alg.json", "f4_pipeline.alg.json"] {
        let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name);
        parse_spec(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn zero_denominator_reports_line_and_column() {
    let text = with_bracket_constant(r#"{ "i": 0, "j": 2, "k": 1, "c": "1/0" }"#);
    match parse_spec_str(&text, "bad.json") {
        Err(CliError::Parse { line, column, .. }) => {
            assert_eq!(line, 13);
            assert!(column > 0);
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn malformed_json_reports_location() {
    let err = parse_spec_str("{\n  \"field\": \"Q\",\n  \"spaces\": {\n", "trunc.json").unwrap_err();
    assert!(matches!(err, CliError::Parse { line: 4, .. }), "{err}");
    assert!(err.to_string().starts_with("trunc.json:4:"));
}

#[test]
fn unknown_fields_are_rejected() {
    let text = SL2.replacen(r#""field": "Q","#, r#""field": "Q", "colour": "red","#, 1);
    assert!(matches!(parse_spec_str(&text, "x"), Err(CliError::Parse { .. })));
}

#[test]
fn out_of_range_index_is_invalid() {
    let text = with_bracket_constant(r#"{ "i": 0, "j": 3, "k": 1, "c": "1" }"#);
    let err = parse_spec_str(&text, "x").unwrap_err();
    assert!(matches!(err, CliError::Invalid { .. }));
    assert!(err.to_string().contains("maps.bracket.constants[4]"), "{err}");
}

#[test]
fn unresolved_references_are_invalid() {
    let text = SL2.replacen(r#""bracket": "bracket" }"#, r#""bracket": "missing" }"#, 1);
    let err = parse_spec_str(&text, "x").unwrap_err();
    assert!(err.to_string().contains("unknown map `missing`"), "{err}");
    let text = SL2.replacen(r#""on": "sl2" }"#, r#""on": "nowhere" }"#, 1);
    assert!(parse_spec_str(&text, "x").is_err());
}

#[test]
fn duplicate_task_ids_are_invalid() {
    let text = SL2.replacen(r#""id": "invariants""#, r#""id": "jacobi""#, 1);
    assert!(matches!(parse_spec_str(&text, "x"), Err(CliError::Invalid { .. })));
}

#[test]
fn fields_of_characteristic_two_and_three_are_rejected() {
    for f in ["F2", "F3", "GF(4)", "R"] {
        let text = SL2.replacen(r#""field": "Q""#, &format!(r#""field": "{f}""#), 1);
        assert!(parse_spec_str(&text, "x").is_err(), "{f} accepted");
    }
    let text = SL2.replacen(r#""field": "Q""#, r#""field": "F7""#, 1);
    assert!(parse_spec_str(&text, "x").is_ok());
}

fn rational_text() -> impl Strategy<Value = String> {
    (-20i64..20, 1i64..9).prop_map(|(n, d)| if d == 1 { n.to_string() } else { format!("{n}/{d}") })
}

proptest! {
    #[test]
    fn specs_round_trip_through_json(cs in prop::collection::vec((0usize..3, 0usize..3, 0usize..3, rational_text()), 0..10)) {
        let constants: Vec<String> = cs
            .iter()
            .map(|(i, j, k, c)| format!(r#"{{ "i": {i}, "j": {j}, "k": {k}, "c": "{c}" }}"#))
            .collect();
        let text = format!(
            r#"{{ "field": "Q", "spaces": {{ "L": ["a", "b", "c"] }},
                 "maps": {{ "m": {{ "domain": ["L", "L"], "codomain": "L", "constants": [{}] }} }},
                 "objects": {{ "x": {{ "kind": "lie", "space": "L", "bracket": "m" }} }} }}"#,
            constants.join(",")
        );
        let spec: AlgSpec = parse_spec_str(&text, "gen").unwrap();
        let again = parse_spec_str(&spec.to_json(), "again").unwrap();
        prop_assert_eq!(spec, again);
    }
}

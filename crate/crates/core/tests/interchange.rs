use hksym::catalog::*;
use hksym::io::{document_to_json, extension_to_json, parse_document, parse_field, quartic_to_json, triple_to_json, Document};
use hksym::exactalg::Field;
use hksym::quadext::build_extension;
use hksym::Error;

fn all_objects() -> Vec<Document> {
    CATALOG_NAMES
        .iter()
        .map(|n| match build_named(n, &CatalogParams::default()).unwrap() {
            CatalogObject::Extension(x) => Document::Extension(x),
            CatalogObject::Quartic(s) => Document::Quartic(s),
        })
        .collect()
}

#[test]
fn catalog_documents_round_trip() {
    for doc in all_objects() {
        let text = document_to_json(&doc);
        let back = parse_document(&text).unwrap();
        assert_eq!(back, doc, "{}", doc.kind());
        assert_eq!(document_to_json(&back), text);
    }
}

#[test]
fn triple_documents_round_trip() {
    for x in [example1(), example2(&[default_a()]).unwrap(), flat_input()] {
        let t = build_extension(&x).unwrap();
        let text = triple_to_json(&t);
        match parse_document(&text).unwrap() {
            Document::Triple(u) => {
                assert_eq!(u, t);
                assert!(u.verify().passed());
            }
            d => panic!("got {}", d.kind()),
        }
    }
}

#[test]
fn rationals_are_written_as_fractions() {
    let text = extension_to_json(&example1());
    assert!(text.contains("\"1/2\"") || text.contains("\"-1/2\"") || text.contains("\"2/1\""));
    assert!(!text.contains("\"2\""));
}

#[test]
fn quadratic_scalars_use_component_objects() {
    let text = quartic_to_json(&ac_builtin());
    assert!(text.contains("\"Q(sqrt(3))\""));
    assert!(text.contains("\"b\": \"1/1\""));
}

#[test]
fn field_names() {
    assert_eq!(parse_field("Q").unwrap(), Field::Rational);
    for s in ["Q(sqrt(3))", "Q(sqrt 3)", "Q(√3)"] {
        assert_eq!(parse_field(s).unwrap(), Field::Quadratic(3), "{s}");
    }
    for s in ["R", "Q(sqrt(4))", "Q(sqrt(x))", ""] {
        assert!(parse_field(s).is_err(), "{s}");
    }
}

#[test]
fn syntax_error_has_position() {
    let text = "{\n  \"scalar_field\": \"Q\",\n  \"n\": 1,\n  \"quartic\": [,]\n}";
    match parse_document(text) {
        Err(Error::Parse(m)) => assert!(m.starts_with("line 4, column"), "{m}"),
        r => panic!("{r:?}"),
    }
}

#[test]
fn unknown_keys_are_rejected() {
    let mut v: serde_json::Value = serde_json::from_str(&quartic_to_json(&ac_builtin())).unwrap();
    v["colour"] = "red".into();
    let e = parse_document(&v.to_string()).unwrap_err();
    assert!(e.to_string().contains("colour"), "{e}");

    let mut v: serde_json::Value = serde_json::from_str(&extension_to_json(&example1())).unwrap();
    v["module"]["extra"] = 1.into();
    assert!(parse_document(&v.to_string()).is_err());
}

#[test]
fn irrational_scalar_in_rational_document() {
    let mut v: serde_json::Value = serde_json::from_str(&quartic_to_json(&ac_builtin())).unwrap();
    v["scalar_field"] = "Q".into();
    assert!(parse_document(&v.to_string()).is_err());
}

#[test]
fn hand_written_quartic() {
    let text = r#"{
        "scalar_field": "Q(√3)",
        "n": 1,
        "quartic": [
            {"monomial": ["p1", "p1", "p1", "p1"], "coeff": "2"},
            {"monomial": ["p1", "p1", "p1", "q1"], "coeff": {"a": "1/2", "b": "-1"}}
        ]
    }"#;
    match parse_document(text).unwrap() {
        Document::Quartic(s) => {
            assert_eq!(s.terms().count(), 2);
            assert_eq!(s.space().dim(), 2);
        }
        d => panic!("got {}", d.kind()),
    }
}

#[test]
fn bad_documents() {
    let cases = [
        "[]",
        "{}",
        r#"{"scalar_field": "Q", "n": 1, "quartic": [{"monomial": ["p2", "p1", "p1", "p1"], "coeff": "1"}]}"#,
        r#"{"scalar_field": "Q", "n": 1, "quartic": [{"monomial": ["p1", "p1", "p1"], "coeff": "1"}]}"#,
        r#"{"scalar_field": "Q", "n": 1, "quartic": [{"monomial": ["p1", "p1", "p1", "p1"], "coeff": "1/0"}]}"#,
        r#"{"scalar_field": "Q", "n": 1, "quartic": [{"monomial": ["p1", "p1", "p1", "p1"], "coeff": 1}]}"#,
    ];
    for c in cases {
        assert!(parse_document(c).is_err(), "{c}");
    }
}

#[test]
fn broken_bracket_table_still_parses() {
    // structural validity is a check, not a parse error
    let mut v: serde_json::Value = serde_json::from_str(&extension_to_json(&example1())).unwrap();
    let b = v["lie_algebra"]["brackets"].as_array_mut().unwrap();
    b.pop();
    let doc = parse_document(&v.to_string()).unwrap();
    match doc {
        Document::Extension(x) => assert!(x.validate().is_err() || build_extension(&x).is_err()),
        d => panic!("got {}", d.kind()),
    }
}

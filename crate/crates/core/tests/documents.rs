use std::path::PathBuf;

use subproj_core::document::{certificate_from_json, certificate_to_json, parse_document, DocumentError};
use subproj_core::subprojectivity::{is_subprojective_complex, Route};

fn fixtures() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let mut v: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    v.sort();
    v
}

#[test]
fn fixtures_round_trip_through_the_canonical_form() {
    for p in fixtures() {
        let doc = parse_document(&std::fs::read_to_string(&p).unwrap()).unwrap();
        let text = doc.to_string_pretty();
        let again = parse_document(&text).unwrap();
        assert_eq!(doc, again, "{}", p.display());
        assert_eq!(text, again.to_string_pretty(), "{}", p.display());
    }
}

#[test]
fn certificates_survive_serialization() {
    for p in fixtures() {
        let doc = parse_document(&std::fs::read_to_string(&p).unwrap()).unwrap();
        for m in doc.complexes.values() {
            for n in doc.complexes.values() {
                let cert = is_subprojective_complex(m, n, Route::Definition).unwrap();
                let (m2, n2, back) = certificate_from_json(&certificate_to_json(m, n, &cert)).unwrap();
                assert_eq!(back.verdict, cert.verdict);
                assert!(back.check(&m2, &n2).unwrap());
            }
        }
    }
}

#[test]
fn errors_carry_positions_and_paths() {
    match parse_document("{\n  \"ring\": \"Z\",\n  oops\n}") {
        Err(DocumentError::Syntax { line, .. }) => assert_eq!(line, 3),
        other => panic!("{other:?}"),
    }
    match parse_document(r#"{"complexes": {"A": {"shift": {"complex": "B", "by": 1}}}}"#) {
        Err(DocumentError::Schema { message, .. }) => assert!(message.contains("B")),
        other => panic!("{other:?}"),
    }
    match parse_document(r#"{"ring": "Zmod:1"}"#) {
        Err(DocumentError::Schema { path, .. }) => assert_eq!(path, "$.ring"),
        other => panic!("{other:?}"),
    }
    match parse_document(r#"{"modules": {"M": {"generators": 1, "relations": {"rows": 2, "cols": 0}}}}"#) {
        Err(DocumentError::Schema { .. }) => {}
        other => panic!("{other:?}"),
    }
}

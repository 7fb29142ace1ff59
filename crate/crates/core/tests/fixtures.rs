use std::fs;
use std::path::PathBuf;

use drs_core::shell::{
    emit_space_document, parse_groupoid, parse_space, parse_space_document, table_to_space,
    InfoTableDocument,
};
use drs_core::{classify, fixtures};

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn space_files_match_builtins() {
    for (name, space) in fixtures::named_spaces() {
        let text = fixture(&format!("{name}.json"));
        assert_eq!(parse_space(&text).unwrap(), space, "{name}");
        let doc = parse_space_document(&text).unwrap();
        assert_eq!(
            emit_space_document(&doc),
            text.trim_end(),
            "{name} is not in canonical form"
        );
    }
}

#[test]
fn table_file_matches_builtin() {
    assert_eq!(
        parse_groupoid(&fixture("table1.json")).unwrap(),
        fixtures::table1()
    );
}

#[test]
fn info_table_file() {
    let doc = InfoTableDocument::parse(&fixture("info-table.json")).unwrap();
    let s = table_to_space(&doc, &doc.attributes).unwrap();
    assert!(classify(&s).is_equivalence());
    assert_eq!(s.len(), doc.objects.len());
}

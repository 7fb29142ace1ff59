//! Text formats: space documents (JSON or edge list), operation tables,
//! information tables and DOT export.

mod dot;

pub use dot::{export_groupoid_order, export_lattice, export_space};

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::magma::FiniteGroupoid;
use crate::relcore::FiniteRelationSpace;

/// On-disk form of a relation space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub universe: Vec<String>,
    pub relation: Vec<(String, String)>,
}

impl SpaceDocument {
    pub fn from_space(space: &FiniteRelationSpace) -> Self {
        Self {
            name: None,
            source: None,
            universe: space.labels().to_vec(),
            relation: space
                .pairs()
                .map(|(a, b)| (space.label(a).to_string(), space.label(b).to_string()))
                .collect(),
        }
    }

    pub fn to_space(&self) -> Result<FiniteRelationSpace> {
        FiniteRelationSpace::new(
            self.universe.iter().cloned(),
            self.relation.iter().map(|(a, b)| (a, b)),
        )
    }
}

/// Parses a space from JSON (text starting with `{`) or an edge list.
///
/// Edge lists hold one pair `a b` per line; a line with a single label
/// declares an element without pairs. Blank lines and `#` comments are
/// skipped. Elements are ordered by first appearance.
pub fn parse_space(text: &str) -> Result<FiniteRelationSpace> {
    parse_space_document(text)?.to_space()
}

pub fn parse_space_document(text: &str) -> Result<SpaceDocument> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    } else {
        parse_edge_list(text)
    }
}

fn parse_edge_list(text: &str) -> Result<SpaceDocument> {
    let mut universe: Vec<String> = Vec::new();
    let mut known = HashSet::new();
    let mut relation = Vec::new();
    let mut seen = HashSet::new();
    let mut declare = |label: &str, universe: &mut Vec<String>| {
        if known.insert(label.to_string()) {
            universe.push(label.to_string());
        }
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [x] => declare(x, &mut universe),
            [a, b] => {
                declare(a, &mut universe);
                declare(b, &mut universe);
                if !seen.insert((a.to_string(), b.to_string())) {
                    return Err(Error::DuplicatePair {
                        a: a.to_string(),
                        b: b.to_string(),
                        line: Some(idx + 1),
                    });
                }
                relation.push((a.to_string(), b.to_string()));
            }
            _ => {
                return Err(Error::Document(format!(
                    "line {}: expected one or two labels, found {}",
                    idx + 1,
                    tokens.len()
                )))
            }
        }
    }
    Ok(SpaceDocument {
        name: None,
        source: None,
        universe,
        relation,
    })
}

/// Pretty JSON; `parse_space(&emit_space(s)) == s`.
pub fn emit_space(space: &FiniteRelationSpace) -> String {
    emit_space_document(&SpaceDocument::from_space(space))
}

pub fn emit_space_document(doc: &SpaceDocument) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

/// Edge-list rendering: one declaration line per element, which fixes the
/// universe order, then the pairs.
pub fn emit_edge_list(space: &FiniteRelationSpace) -> String {
    let mut out = String::new();
    for label in space.labels() {
        out.push_str(label);
        out.push('\n');
    }
    for (a, b) in space.pairs() {
        out.push_str(&format!("{} {}\n", space.label(a), space.label(b)));
    }
    out
}

/// Operation table as label rows: `table[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub universe: Vec<String>,
    pub table: Vec<Vec<String>>,
}

pub fn parse_groupoid(text: &str) -> Result<FiniteGroupoid> {
    let doc: GroupoidDocument =
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    FiniteGroupoid::from_label_rows(doc.universe, &doc.table)
}

pub fn emit_groupoid(g: &FiniteGroupoid) -> String {
    let doc = GroupoidDocument {
        name: None,
        universe: g.labels().to_vec(),
        table: g
            .rows()
            .into_iter()
            .map(|row| row.into_iter().map(|x| g.label(x).to_string()).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("documents serialize")
}

/// Objects, attributes and the value set `ν(a, x)` of every attribute at
/// every object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InfoTableDocument {
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub values: BTreeMap<String, BTreeMap<String, Vec<serde_json::Value>>>,
}

impl InfoTableDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<()> {
        for a in &self.attributes {
            let row = self
                .values
                .get(a)
                .ok_or_else(|| Error::Document(format!("no values for attribute `{a}`")))?;
            if let Some(x) = self.objects.iter().find(|x| !row.contains_key(*x)) {
                return Err(Error::Document(format!(
                    "no value of `{a}` at object `{x}`"
                )));
            }
        }
        if let Some(a) = self.values.keys().find(|a| !self.attributes.contains(a)) {
            return Err(Error::UnknownLabel(a.clone()));
        }
        Ok(())
    }

    /// `ν(a, x)` as a set of canonical JSON strings.
    pub fn value(&self, attribute: &str, object: &str) -> BTreeSet<String> {
        self.values[attribute][object]
            .iter()
            .map(|v| v.to_string())
            .collect()
    }

    /// Every value set is a singleton.
    pub fn is_deterministic(&self) -> bool {
        self.attributes
            .iter()
            .all(|a| self.objects.iter().all(|x| self.value(a, x).len() == 1))
    }
}

/// `x σ w` iff `ν(a, x) = ν(a, w)` for every `a ∈ B`.
pub fn table_to_space<S: AsRef<str>>(
    table: &InfoTableDocument,
    b: &[S],
) -> Result<FiniteRelationSpace> {
    table.validate()?;
    if b.is_empty() {
        return Err(Error::Document("attribute subset B is empty".into()));
    }
    for a in b {
        if !table.attributes.iter().any(|x| x == a.as_ref()) {
            return Err(Error::UnknownLabel(a.as_ref().to_string()));
        }
    }
    let rows: Vec<Vec<BTreeSet<String>>> = table
        .objects
        .iter()
        .map(|x| b.iter().map(|a| table.value(a.as_ref(), x)).collect())
        .collect();
    FiniteRelationSpace::from_fn(table.objects.iter().cloned(), |x, w| rows[x] == rows[w])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::relcore::classify;

    #[test]
    fn json_round_trip() {
        for (name, space) in fixtures::named_spaces() {
            assert_eq!(parse_space(&emit_space(&space)).unwrap(), space, "{name}");
            assert_eq!(
                parse_space(&emit_edge_list(&space)).unwrap(),
                space,
                "{name}"
            );
        }
    }

    #[test]
    fn edge_list() {
        let s = parse_space("a c\na e\n").unwrap();
        assert_eq!(s.pair_count(), 2);
        assert_eq!(s.labels(), ["a", "c", "e"]);
        let s = parse_space("# comment\nz\nx y  # trailing\n\n").unwrap();
        assert_eq!(s.labels(), ["z", "x", "y"]);
        assert_eq!(s.pair_count(), 1);
    }

    #[test]
    fn duplicate_pair_names_its_line() {
        let err = parse_space("a b\nb a\na b\n").unwrap_err();
        assert_eq!(
            err,
            Error::DuplicatePair {
                a: "a".into(),
                b: "b".into(),
                line: Some(3)
            }
        );
        assert!(err.to_string().contains("line 3"));
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(parse_space("a b c"), Err(Error::Document(_))));
        assert!(matches!(
            parse_space("{\"universe\": [\"a\"]}"),
            Err(Error::Document(_))
        ));
        assert!(matches!(
            parse_space("{\"universe\": [\"a\"], \"relation\": [[\"a\", \"b\"]]}"),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn groupoid_round_trip() {
        let t = fixtures::table1();
        assert_eq!(parse_groupoid(&emit_groupoid(&t)).unwrap(), t);
    }

    fn table(values: &str) -> InfoTableDocument {
        InfoTableDocument::parse(&format!(
            r#"{{"objects": ["x", "y", "z"], "attributes": ["colour", "size"], "values": {values}}}"#
        ))
        .unwrap()
    }

    #[test]
    fn agreeing_objects_are_related() {
        let t = table(
            r#"{"colour": {"x": ["red"], "y": ["red"], "z": ["blue"]},
                "size": {"x": [1], "y": [2], "z": [1, 2]}}"#,
        );
        assert!(!t.is_deterministic());
        let s = table_to_space(&t, &["colour"]).unwrap();
        assert!(s.related(0, 1) && s.related(1, 0));
        assert!(!s.related(0, 2));
        assert!(classify(&s).is_equivalence());
        let s = table_to_space(&t, &["colour", "size"]).unwrap();
        assert_eq!(s.pair_count(), 3);
    }

    #[test]
    fn table_errors() {
        let t = table(
            r#"{"colour": {"x": [1], "y": [1], "z": [1]}, "size": {"x": [1], "y": [1], "z": [1]}}"#,
        );
        assert!(matches!(
            table_to_space::<&str>(&t, &[]),
            Err(Error::Document(_))
        ));
        assert!(matches!(
            table_to_space(&t, &["weight"]),
            Err(Error::UnknownLabel(_))
        ));
        let missing = InfoTableDocument::parse(
            r#"{"objects": ["x"], "attributes": ["a"], "values": {"a": {}}}"#,
        );
        assert!(matches!(missing, Err(Error::Document(_))));
    }
}

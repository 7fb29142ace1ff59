use serde::Serialize;
use serde_json::{Map, Value};

/// Ordered output fields plus the pass/fail checks that `--expect-hold`
/// consults. Text and JSON renderings come from the same values.
#[derive(Default)]
pub struct Report {
    fields: Vec<(String, Value, Option<String>)>,
    checks: Vec<bool>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.fields.push((key.to_string(), v, None));
        self
    }

    /// A field whose text rendering differs from the generic one.
    pub fn field_with_text(&mut self, key: &str, value: impl Serialize, text: String) -> &mut Self {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.fields.push((key.to_string(), v, Some(text)));
        self
    }

    /// A boolean field that also counts as a check.
    pub fn verdict(&mut self, key: &str, holds: bool) -> &mut Self {
        self.checks.push(holds);
        self.field(key, holds)
    }

    pub fn check(&mut self, holds: bool) {
        self.checks.push(holds);
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|&c| c)
    }

    pub fn to_json(&self) -> String {
        let map: Map<String, Value> = self
            .fields
            .iter()
            .map(|(k, v, _)| (k.clone(), v.clone()))
            .collect();
        serde_json::to_string_pretty(&Value::Object(map)).expect("values serialize")
    }

    pub fn to_text(&self) -> String {
        let width = self
            .fields
            .iter()
            .map(|(k, _, _)| k.len())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for (key, value, text) in &self.fields {
            match (text, value) {
                (Some(t), _) => out.push_str(&format!("{key:width$}: {t}\n")),
                (None, Value::Array(rows))
                    if !rows.is_empty() && rows.iter().all(Value::is_object) =>
                {
                    out.push_str(&format!("{key}:\n"));
                    out.push_str(&table(rows));
                }
                (None, v) => out.push_str(&format!("{key:width$}: {}\n", scalar(v))),
            }
        }
        out
    }
}

/// Strings bare, lists of labels as `{a,b}`, nested lists bracketed.
pub fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            format!(
                "{{{}}}",
                items.iter().map(scalar).collect::<Vec<_>>().join(",")
            )
        }
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(scalar).collect::<Vec<_>>().join(", ")
        ),
        Value::Object(map) => format!(
            "{{{}}}",
            map.iter()
                .map(|(k, v)| format!("{k}={}", scalar(v)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        other => other.to_string(),
    }
}

fn table(rows: &[Value]) -> String {
    let cells: Vec<Vec<(String, String)>> = rows
        .iter()
        .map(|r| {
            r.as_object()
                .expect("checked by caller")
                .iter()
                .map(|(k, v)| (k.clone(), scalar(v)))
                .collect()
        })
        .collect();
    let columns = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            cells
                .iter()
                .filter_map(|r| r.get(c))
                .map(|(k, v)| k.len() + 1 + v.len())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, (k, v))| format!("{:w$}", format!("{k}={v}"), w = widths[c]))
            .collect();
        out.push_str("  ");
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// `(a,b) (c,d)` rendering of labeled pairs.
pub fn pairs_text(pairs: &[(String, String)]) -> String {
    if pairs.is_empty() {
        return "none".into();
    }
    pairs
        .iter()
        .map(|(a, b)| format!("({a},{b})"))
        .collect::<Vec<_>>()
        .join(" ")
}

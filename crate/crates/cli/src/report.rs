use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{EXIT_FALSE, EXIT_OK};

/// Ordered key/value lines closed by a verdict.
#[derive(Debug, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
    pub verdict: String,
    pub exit_code: i32,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn field(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.fields.push((key.to_string(), v));
        self
    }

    /// Sets the verdict; a negative one makes the command exit with the false-verdict code.
    pub fn verdict(&mut self, text: impl Into<String>, positive: bool) -> &mut Self {
        self.verdict = text.into();
        self.exit_code = if positive { EXIT_OK } else { EXIT_FALSE };
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
        out.push_str(&format!("VERDICT: {}\n", self.verdict));
        out
    }

    /// The same data as one JSON object. Keys that occur more than once collect their
    /// values into an array.
    pub fn render_json(&self) -> String {
        let mut map = Map::new();
        for (k, v) in &self.fields {
            let count = self.fields.iter().filter(|(other, _)| other == k).count();
            if count == 1 {
                map.insert(k.clone(), v.clone());
            } else {
                let entry = map
                    .entry(k.clone())
                    .or_insert_with(|| Value::Array(Vec::new()));
                if let Value::Array(items) = entry {
                    items.push(v.clone());
                }
            }
        }
        map.insert("verdict".into(), Value::String(self.verdict.clone()));
        let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("report serializes");
        s.push('\n');
        s
    }
}

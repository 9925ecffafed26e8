use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

/// One line of command output: a label and ordered fields.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub label: String,
    pub fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new(label: impl Into<String>) -> Self {
        Record {
            label: label.into(),
            fields: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut line = self.label.clone();
                for (k, v) in &self.fields {
                    let v = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    line.push_str(&format!(" {k}={v}"));
                }
                line
            }
            Format::JsonLines => {
                let mut obj = Map::new();
                obj.insert("record".into(), Value::String(self.label.clone()));
                for (k, v) in &self.fields {
                    obj.insert(k.clone(), v.clone());
                }
                Value::Object(obj).to_string()
            }
        }
    }
}

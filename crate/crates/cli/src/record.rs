use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

/// One self-describing JSON document per invocation.
#[derive(Debug, Serialize)]
pub struct OutputRecord<'a, T: Serialize> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub payload: &'a T,
}

impl<'a, T: Serialize> OutputRecord<'a, T> {
    pub fn new(command: &'static str, payload: &'a T) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("payloads serialize");
        s.push('\n');
        s
    }
}

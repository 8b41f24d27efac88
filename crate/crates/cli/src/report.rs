use serde::Serialize;
use serde_json::Value;

/// Version of the JSON layout documented in `docs/json-schema.md`.
pub const SCHEMA_VERSION: u32 = 1;

/// The envelope around every `--json` output.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    /// The arguments after the program name.
    pub command: Vec<String>,
    /// Step sets the report is about, as 8-character masks.
    pub models: Vec<String>,
    pub status: Status,
    pub payload: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
}

impl Report {
    pub fn new(command: Vec<String>, models: Vec<String>, status: Status, payload: Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            models,
            status,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }
}

//! The JSON document every command emits with `--json`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Version of the report layout; bump on incompatible changes.
pub const SCHEMA_VERSION: &str = "1.0";

/// The published JSON schema for [`ReportDocument`].
pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub warnings: Vec<String>,
    pub errors: Vec<String>,
    /// A pair, staircase, or postulation budget stopped the computation.
    pub budget_exhausted: bool,
    pub seed: Option<u64>,
    pub characteristic: Option<u64>,
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    /// The command line, program name excluded.
    pub command: Vec<String>,
    /// Inputs as interpreted: canonical ring text, ideal generators, and
    /// numeric parameters.
    pub inputs: BTreeMap<String, Value>,
    /// Command-specific payload; `null` when the command failed.
    pub results: Value,
    pub diagnostics: Diagnostics,
}

impl ReportDocument {
    pub fn new(command: Vec<String>) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command,
            inputs: BTreeMap::new(),
            results: Value::Null,
            diagnostics: Diagnostics::default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

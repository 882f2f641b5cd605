use std::time::Duration;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::args::GlobalArgs;
use crate::error::CliError;

pub const TOOL: &str = "ceda";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Envelope shared by every JSON report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report<T> {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: GlobalArgs,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u64>,
    pub passed: bool,
    pub result: T,
}

impl<T: Serialize + DeserializeOwned + PartialEq> Report<T> {
    pub fn new(command: &str, config: &GlobalArgs, elapsed: Duration, passed: bool, result: T) -> Self {
        Report {
            tool: TOOL.to_string(),
            version: VERSION.to_string(),
            command: command.to_string(),
            config: config.clone(),
            seed: config.seed,
            duration_ms: (!config.omit_timing).then_some(elapsed.as_millis() as u64),
            passed,
            result,
        }
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        to_validated_json(self)
    }
}

/// Pretty JSON that is checked to parse back into an equal value.
pub fn to_validated_json<T: Serialize + DeserializeOwned + PartialEq>(value: &T) -> Result<String, CliError> {
    let text = serde_json::to_string_pretty(value)?;
    let back: T = serde_json::from_str(&text)?;
    if &back != value {
        return Err(CliError::Schema("serialized output does not round-trip".into()));
    }
    Ok(text)
}

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// Final status of a run, mapped onto the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Yes,
    No,
}

impl Outcome {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Outcome::Yes
        } else {
            Outcome::No
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Outcome::Yes => 0,
            Outcome::No => 1,
        }
    }
}

/// Accumulates one run's JSON report.
pub struct Report {
    command: Vec<String>,
    inputs: BTreeMap<String, String>,
    result: Map<String, Value>,
    stats: Map<String, Value>,
    summary: Option<String>,
    started: Instant,
}

impl Report {
    pub fn new() -> Self {
        Report {
            command: std::env::args().collect(),
            inputs: BTreeMap::new(),
            result: Map::new(),
            stats: Map::new(),
            summary: None,
            started: Instant::now(),
        }
    }

    /// Reads an input file and records its sha256 digest.
    pub fn read_input(&mut self, path: &Path) -> Result<String> {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        let digest = Sha256::digest(&bytes);
        self.inputs.insert(path.display().to_string(), format!("{digest:x}"));
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.result.insert(key.to_owned(), value.into());
    }

    pub fn stat(&mut self, key: &str, value: impl Into<Value>) {
        self.stats.insert(key.to_owned(), value.into());
    }

    pub fn summary(&mut self, text: impl Into<String>) {
        self.summary = Some(text.into());
    }

    pub fn render(self, human: bool, error: Option<&anyhow::Error>) -> String {
        let mut doc = json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "stats": self.stats,
            "wall_time_ms": self.started.elapsed().as_secs_f64() * 1e3,
        });
        if let Some(e) = error {
            doc["error"] = Value::String(format!("{e:#}"));
        }
        if human {
            let text = match error {
                Some(e) => format!("error: {e:#}"),
                None => self.summary.unwrap_or_default(),
            };
            doc["summary"] = Value::String(text);
        }
        serde_json::to_string_pretty(&doc).expect("report is valid JSON")
    }
}

pub fn write_output(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

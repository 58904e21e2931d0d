//! Machine-readable reports, schema `vwb/1`.
//!
//! Objects are `BTreeMap`-backed so keys come out sorted and identical
//! inputs serialize to identical bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::exact::Rational;

pub const SCHEMA: &str = "vwb/1";

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema {found:?}, expected {SCHEMA:?}")]
    Schema { found: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    pub fn exit_code(&self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Unknown => 3,
        }
    }

    /// Fail dominates unknown, which dominates pass.
    pub fn combine(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Unknown, _) | (_, Status::Unknown) => Status::Unknown,
            _ => Status::Pass,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        }
    }
}

/// A published value that disagrees with the value computed another way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub location: String,
    pub paper_value: Value,
    pub derived_value: Value,
}

impl Discrepancy {
    pub fn new(location: impl Into<String>, paper_value: impl Serialize, derived_value: impl Serialize) -> Self {
        Self {
            location: location.into(),
            paper_value: to_value(paper_value),
            derived_value: to_value(derived_value),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub discrepancies: Vec<Discrepancy>,
    pub status: Status,
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values are plain data")
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            schema: SCHEMA.to_string(),
            command: command.into(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            discrepancies: Vec::new(),
            status: Status::Pass,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.inputs.insert(key.to_string(), to_value(value));
        self
    }

    pub fn output(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.outputs.insert(key.to_string(), to_value(value));
        self
    }

    pub fn discrepancy(&mut self, d: Discrepancy) -> &mut Self {
        self.discrepancies.push(d);
        self
    }

    pub fn mark(&mut self, status: Status) -> &mut Self {
        self.status = self.status.combine(status);
        self
    }

    /// Sorts the discrepancy list so that emission order never depends on
    /// evaluation order.
    pub fn finish(mut self) -> Self {
        self.discrepancies
            .sort_by_cached_key(|d| (d.location.clone(), d.paper_value.to_string(), d.derived_value.to_string()));
        self.discrepancies.dedup();
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        let report: Report = serde_json::from_str(text)?;
        if report.schema != SCHEMA {
            return Err(ReportError::Schema { found: report.schema });
        }
        Ok(report)
    }
}

/// `{"num": "...", "den": "..."}`, exact at any size.
pub fn rational_json(q: &Rational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

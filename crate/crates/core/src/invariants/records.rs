//! The table of classical indices shipped with the crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const RECORDS_VERSION: u32 = 1;

const RECORDS_JSON: &str = include_str!("../../data/knot_records.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotRecord {
    pub name: String,
    #[serde(default = "one")]
    pub components: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bridge: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossing: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arc: Option<u32>,
    /// Lattice stick index, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stick_index: Option<u32>,
    pub source: String,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RecordFile {
    version: u32,
    records: Vec<KnotRecord>,
}

impl KnotRecord {
    fn check(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Parse(format!("record {}: {what}", self.name)));
        if self.components == 0 {
            return bad("needs at least one component");
        }
        if self.bridge == Some(0) {
            return bad("bridge index must be at least 1");
        }
        if self.arc.is_some_and(|a| a < 2) {
            return bad("arc index must be at least 2");
        }
        Ok(())
    }
}

/// Parses a record table in the shipped format.
pub fn parse_records(json: &str) -> Result<Vec<KnotRecord>> {
    let file: RecordFile = serde_json::from_str(json)?;
    if file.version != RECORDS_VERSION {
        return Err(Error::Parse(format!("unsupported record table version {}", file.version)));
    }
    for r in &file.records {
        r.check()?;
    }
    Ok(file.records)
}

pub fn records_to_json(records: &[KnotRecord]) -> String {
    serde_json::to_string_pretty(&RecordFile {
        version: RECORDS_VERSION,
        records: records.to_vec(),
    })
    .expect("records serialize")
}

/// The shipped table.
pub fn knot_records() -> Vec<KnotRecord> {
    parse_records(RECORDS_JSON).expect("shipped record table is well formed")
}

pub fn record(name: &str) -> Result<KnotRecord> {
    let all = knot_records();
    all.iter().find(|r| r.name == name).cloned().ok_or_else(|| Error::UnknownName {
        name: name.to_string(),
        known: all.iter().map(|r| r.name.as_str()).collect::<Vec<_>>().join(", "),
    })
}

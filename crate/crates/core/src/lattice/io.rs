//! JSON conformation format:
//! `{"version":1,"components":[[[x,y,z],...],...]}`, corners in cyclic order.
//! `version` may be omitted on input.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{Component, Conformation, LatticePoint};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    version: Option<u32>,
    components: Vec<Vec<[i64; 3]>>,
}

impl Wire {
    fn from_conformation(c: &Conformation) -> Wire {
        Wire {
            version: Some(FORMAT_VERSION),
            components: c
                .components
                .iter()
                .map(|comp| comp.corners.iter().map(|p| p.to_array()).collect())
                .collect(),
        }
    }

    fn into_conformation(self) -> Result<Conformation> {
        if let Some(v) = self.version {
            if v != FORMAT_VERSION {
                return Err(Error::Parse(format!("unsupported conformation format version {v}")));
            }
        }
        Ok(Conformation::new(
            self.components
                .into_iter()
                .map(|comp| Component::new(comp.into_iter().map(LatticePoint::from_array).collect()))
                .collect(),
        ))
    }
}

impl Serialize for Conformation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire::from_conformation(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Conformation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Conformation, D::Error> {
        Wire::deserialize(d)?.into_conformation().map_err(serde::de::Error::custom)
    }
}

pub fn to_json(c: &Conformation) -> String {
    serde_json::to_string(&Wire::from_conformation(c)).expect("conformation serializes")
}

/// Parses the JSON format. The result is not validated.
pub fn from_json(s: &str) -> Result<Conformation> {
    serde_json::from_str::<Wire>(s)?.into_conformation()
}

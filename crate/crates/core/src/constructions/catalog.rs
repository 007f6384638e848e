//! Minimal lattice conformations shipped as data, each with the Jones
//! polynomial of its knot or link type (in `x = t^{1/2}`) as tabulated by
//! KnotInfo and LinkInfo, and oriented and mirrored so the computed
//! polynomial equals it exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{record, JonesPoly, KnotRecord};
use crate::lattice::{Component, Conformation, LatticePoint};
use crate::poly::LaurentPoly;

pub const CATALOG_VERSION: u32 = 1;

const CATALOG_JSON: &str = include_str!("../../data/catalog.json");

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireEntry {
    name: String,
    reference: String,
    jones_x: Vec<(i32, i64)>,
    components: Vec<Vec<[i64; 3]>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireCatalog {
    version: u32,
    entries: Vec<WireEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub conformation: Conformation,
    /// Expected Jones polynomial of this exact conformation.
    pub jones: JonesPoly,
    /// Where the expected polynomial comes from (KnotInfo or LinkInfo name).
    pub reference: String,
}

fn entries() -> Vec<CatalogEntry> {
    let wire: WireCatalog = serde_json::from_str(CATALOG_JSON).expect("shipped catalog is well formed");
    assert_eq!(wire.version, CATALOG_VERSION);
    wire.entries
        .into_iter()
        .map(|e| CatalogEntry {
            name: e.name,
            conformation: Conformation::new(
                e.components
                    .into_iter()
                    .map(|c| Component::new(c.into_iter().map(LatticePoint::from_array).collect()))
                    .collect(),
            ),
            jones: JonesPoly(LaurentPoly::from_terms(e.jones_x)),
            reference: e.reference,
        })
        .collect()
}

pub fn catalog_names() -> Vec<String> {
    entries().into_iter().map(|e| e.name).collect()
}

pub fn catalog_entry(name: &str) -> Result<CatalogEntry> {
    let all = entries();
    let known = all.iter().map(|e| e.name.as_str()).collect::<Vec<_>>().join(", ");
    all.iter().find(|e| e.name == name).cloned().ok_or(Error::UnknownName {
        name: name.to_string(),
        known,
    })
}

/// The cataloged conformation named `name` with its table record.
pub fn catalog(name: &str) -> Result<(Conformation, KnotRecord)> {
    let e = catalog_entry(name)?;
    Ok((e.conformation, record(name)?))
}

//! Explicit conformations: torus knots, connected sums, braid satellites,
//! two-braid links, arc-presentation conversion and the catalog.

mod arc;
mod braid_link;
mod catalog;
mod compose;
mod satellite;
mod torus;

pub use arc::{from_arc_presentation, lift_grid, ArcPresentation};
pub use braid_link::two_braid_link;
pub use catalog::{catalog, catalog_entry, catalog_names, CatalogEntry, CATALOG_VERSION};
pub use compose::{compose, compose_auto};
pub use satellite::{
    insertable_sign, satellite, satellite_base, satellite_multi, PermutationWord, WordSign,
};
pub use torus::torus_knot;

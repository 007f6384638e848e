//! Knots and links as closed polygons of axis-parallel sticks on the cubic
//! lattice: validation, leveling, projection, polynomial invariants,
//! stick-number bounds, explicit constructions and exhaustive search.

pub mod cli;
pub mod error;
pub mod invariants;
pub mod constructions;
pub mod diagram;
pub mod lattice;
pub mod poly;
pub mod search;

pub use error::{Error, Result};
pub use lattice::{Axis, Component, Conformation, LatticePoint};
pub use poly::LaurentPoly;

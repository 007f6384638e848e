//! Every cataloged minimal conformation with its bound report.
//!
//! cargo run --example catalog_tour

use latstick::constructions::{catalog, catalog_entry, catalog_names};
use latstick::invariants::{check_bounds, jones_of};
use latstick::Result;

fn main() -> Result<()> {
    for name in catalog_names() {
        let (c, r) = catalog(&name)?;
        let e = catalog_entry(&name)?;
        let j = jones_of(&c)?;
        println!("{name}: Jones {j} (matches {}: {})", e.reference, j == e.jones);
        println!("{}", check_bounds(&r, &c)?);
    }
    Ok(())
}

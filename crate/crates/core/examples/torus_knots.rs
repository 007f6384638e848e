//! The torus knots T(p, p+1) with 6p sticks, 2p along each axis.
//!
//! cargo run --example torus_knots [p]

use latstick::constructions::torus_knot;
use latstick::invariants::{check_bounds, record};
use latstick::lattice::{stick_count, to_json};
use latstick::Result;

fn main() -> Result<()> {
    let p: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let k = torus_knot(p)?;
    let n = stick_count(&k)?;
    println!("T({p},{}): {} sticks ({}, {}, {})", p + 1, n.total(), n.px, n.py, n.pz);
    if let Ok(r) = record(&format!("T({p},{})", p + 1)) {
        println!("{}", check_bounds(&r, &k)?);
    }
    println!("{}", to_json(&k));
    Ok(())
}

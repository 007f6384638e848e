//! Converts a grid diagram (an arc presentation) into a lattice knot with at
//! most 6α - 16 sticks.
//!
//! cargo run --example arc_presentation

use latstick::constructions::{from_arc_presentation, ArcPresentation};
use latstick::invariants::{bound_arc_upper, jones_of, torus_jones_oracle};
use latstick::Result;

fn main() -> Result<()> {
    // cinquefoil T(2,5): column k holds markers in rows k and k+2 (mod 7)
    let grid: Vec<[u32; 2]> = (1..=7u32)
        .flat_map(|k| [[k, k], [k, (k + 1) % 7 + 1]])
        .collect();
    let a = ArcPresentation::from_grid(&grid)?;
    let k = from_arc_presentation(&a)?;
    println!(
        "α = {}: {} sticks (bound {}), Jones of T(2,5) up to mirror: {}",
        a.alpha(),
        k.stick_total(),
        bound_arc_upper(a.alpha() as u32)?,
        jones_of(&k)?.eq_up_to_mirror(&torus_jones_oracle(2, 5)?)
    );
    Ok(())
}

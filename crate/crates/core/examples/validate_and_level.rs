//! Reads a conformation, checks it, counts sticks per axis and moves it onto
//! consecutive levels.
//!
//! cargo run --example validate_and_level [conformation.json]

use latstick::lattice::{from_json, is_properly_leveled, properly_level, stick_count, to_json, validate};
use latstick::{Conformation, Result};

fn main() -> Result<()> {
    let c = match std::env::args().nth(1) {
        Some(path) => from_json(&std::fs::read_to_string(path)?)?,
        // an 8-stick unknot with three x-sticks, spread over uneven levels
        None => Conformation::from_arrays(&[&[
            [0, 0, 0],
            [3, 0, 0],
            [3, 5, 0],
            [7, 5, 0],
            [7, 9, 0],
            [0, 9, 0],
            [0, 9, 4],
            [0, 0, 4],
        ]]),
    };
    let report = validate(&c);
    if !report.is_ok() {
        println!("{report}");
        return Ok(());
    }
    let n = stick_count(&c)?;
    println!("valid: {} sticks (x {}, y {}, z {})", n.total(), n.px, n.py, n.pz);
    println!("properly leveled: {}", is_properly_leveled(&c));
    let l = properly_level(&c);
    let (lo, hi) = l.bounding_box();
    println!("leveled into [{lo}, {hi}]: {}", to_json(&l));

    // a corner in the middle of a straight run is rejected
    let mut broken = c.clone();
    let (a, b) = broken.components[0].stick(0);
    let mid = a.with(latstick::Axis::X, (a.x + b.x) / 2);
    broken.components[0].corners.insert(1, mid);
    println!("with an extra corner: {}", validate(&broken));
    Ok(())
}

//! Two-component links with linking number n on 4n + 4 sticks: a planar
//! rectangle threaded n times by the second component.
//!
//! cargo run --example two_braid_links

use latstick::constructions::two_braid_link;
use latstick::diagram::{linking_number, project_auto};
use latstick::invariants::bound_link_planar;
use latstick::{Axis, Result};

fn main() -> Result<()> {
    for n in [1, 4, 5, 6, 10] {
        let l = two_braid_link(n)?;
        let lk = linking_number(&project_auto(&l, Axis::Z)?, 0, 1)?;
        println!(
            "n = {n:2}: {} sticks (lower bound {}), linking number {lk}",
            l.stick_total(),
            bound_link_planar(n)
        );
    }
    // n = 2 and 3 need one more stick than the general bound
    println!("n = 2: {}", two_braid_link(2).unwrap_err());
    Ok(())
}

//! Kauffman bracket and Jones polynomial, from PD codes and from
//! conformations, checked against the torus-knot formula.
//!
//! cargo run --example jones_polynomials

use latstick::constructions::torus_knot;
use latstick::diagram::PDCode;
use latstick::invariants::{bracket_by_contraction, jones_of, jones_of_pd, kauffman_bracket, torus_jones_oracle};
use latstick::Result;

fn main() -> Result<()> {
    let trefoil = PDCode::parse("X[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]")?;
    println!("trefoil bracket (state sum):  {}", kauffman_bracket(&trefoil)?.display_in("A"));
    println!("trefoil bracket (contraction): {}", bracket_by_contraction(&trefoil)?.display_in("A"));
    println!("trefoil Jones: {}", jones_of_pd(&trefoil)?);
    for p in 2..=4 {
        let k = torus_knot(p)?;
        let j = jones_of(&k)?;
        let oracle = torus_jones_oracle(p, p + 1)?;
        println!(
            "T({p},{}): {} sticks, Jones {j}, formula agrees up to mirror: {}",
            p + 1,
            k.stick_total(),
            j.eq_up_to_mirror(&oracle)
        );
    }
    Ok(())
}

//! A 216-stick knot: a 2-string satellite of the connected sum of a 5-string
//! satellite of the trefoil, the (4,5)-torus knot and a 2-string satellite
//! of 9_46. Each factor realizes 6 times its bridge index, so the result does
//! too (bridge index 36).
//!
//! cargo run --release --example compound_satellite [out.json]

use latstick::constructions::{catalog, compose_auto, insertable_sign, satellite, torus_knot, PermutationWord};
use latstick::lattice::{stick_count, to_json, torsion_sticks};
use latstick::{Conformation, Result};

/// An `n`-string satellite whose word cycles all strands, inserted at the
/// first torsion stick.
fn cyclic_satellite(j: &Conformation, n: usize) -> Result<Conformation> {
    let t = torsion_sticks(j)[0];
    let sign = insertable_sign(j, &t)?;
    let word = PermutationWord::new(n, (1..n).collect(), sign)?;
    satellite(j, n, &word, &t)
}

fn main() -> Result<()> {
    let (trefoil, _) = catalog("3_1")?;
    let (k946, _) = catalog("9_46")?;
    let a = cyclic_satellite(&trefoil, 5)?;
    let b = torus_knot(4)?;
    let c = cyclic_satellite(&k946, 2)?;
    for (name, k) in [("5-string satellite of 3_1", &a), ("T(4,5)", &b), ("2-string satellite of 9_46", &c)] {
        println!("{name}: {} sticks", k.stick_total());
    }
    let sum = compose_auto(&compose_auto(&a, &b)?, &c)?;
    println!("connected sum: {} sticks", sum.stick_total());
    let k = cyclic_satellite(&sum, 2)?;
    let n = stick_count(&k)?;
    println!(
        "2-string satellite: {} sticks ({}, {}, {}), {} component",
        n.total(),
        n.px,
        n.py,
        n.pz,
        k.components.len()
    );
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, to_json(&k))?;
        println!("wrote {path}");
    }
    Ok(())
}

//! Connected sums along L-shaped corners: each sum saves 6 sticks, so a
//! chain of n trefoils uses 6n + 6.
//!
//! cargo run --example connected_sum

use latstick::constructions::{catalog, compose_auto};
use latstick::invariants::jones_of;
use latstick::lattice::detect_exterior_ls;
use latstick::Result;

fn main() -> Result<()> {
    let (trefoil, _) = catalog("3_1")?;
    let (k820, _) = catalog("8_20")?;
    println!("trefoil has {} exterior L's", detect_exterior_ls(&trefoil).len());

    let sum = compose_auto(&trefoil, &k820)?;
    let product = &jones_of(&trefoil)? * &jones_of(&k820)?;
    println!(
        "3_1 # 8_20: {} sticks, Jones is the product: {}",
        sum.stick_total(),
        jones_of(&sum)? == product
    );

    let mut chain = trefoil.clone();
    for n in 2..=4 {
        chain = compose_auto(&chain, &trefoil)?;
        println!("{n} trefoils: {} sticks", chain.stick_total());
    }
    Ok(())
}

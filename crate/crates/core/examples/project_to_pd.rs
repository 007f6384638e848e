//! Projects the Hopf link and the trefoil along each axis and prints the PD
//! codes, writhes and linking numbers.
//!
//! cargo run --example project_to_pd

use latstick::constructions::catalog;
use latstick::diagram::{crossing_count, linking_number, pd_code, project_auto, writhe};
use latstick::{Axis, Result};

fn main() -> Result<()> {
    for name in ["3_1", "2_1^2"] {
        let (c, _) = catalog(name)?;
        println!("{name}");
        for axis in Axis::ALL {
            let d = project_auto(&c, axis)?;
            print!("  along {axis}: {} crossings, writhe {}", crossing_count(&d), writhe(&d));
            if c.components.len() == 2 {
                print!(", linking number {}", linking_number(&d, 0, 1)?);
            }
            println!();
        }
        println!("{}", pd_code(&project_auto(&c, Axis::Z)?).to_text());
    }
    Ok(())
}

//! Writes a conformation as Wavefront OBJ polylines for offline viewing.
//!
//! cargo run --example export_obj > torus.obj

use latstick::cli::{run, Command};
use latstick::constructions::torus_knot;
use latstick::lattice::to_json;
use latstick::Result;

fn main() -> Result<()> {
    let json = to_json(&torus_knot(4)?);
    let cmd = Command::Export { input: None, obj: true };
    run(&cmd, &mut json.as_bytes(), &mut std::io::stdout())
}

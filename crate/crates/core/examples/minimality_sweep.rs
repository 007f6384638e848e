//! Enumerates every properly leveled polygon up to a stick budget and lists
//! the Jones classes found. The trefoil first appears at 12 sticks and the
//! figure-eight at 14.
//!
//! cargo run --release --example minimality_sweep [max_budget] [workers] [checkpoint]

use latstick::search::{sweep, EnumerationSpec};
use latstick::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let max: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);
    let workers: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let checkpoint = args.next();
    for budget in 4..=max {
        let spec = EnumerationSpec::new(budget);
        // a checkpoint file belongs to one sweep
        let ckpt = checkpoint.as_ref().map(|p| std::path::PathBuf::from(format!("{p}.{budget}")));
        let t = std::time::Instant::now();
        let r = sweep(&spec, workers, ckpt.as_deref())?;
        println!("s = {budget}: {} polygons in {:.2?}", r.polygons, t.elapsed());
        for c in r.nontrivial() {
            println!("  {} x {}", c.jones, c.count);
        }
    }
    Ok(())
}

//! Circular altitude of a few small graphs, with the witness ordering and
//! its longest monotonic cycle.
//!
//! cargo run --release --example altitude -- [graph ...]

use circalt::altitude::{circular_altitude_exact, DEFAULT_BUDGET};
use circalt::graph_core::{chromatic_number, clique_number};
use circalt::named;
use std::time::Instant;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["C5", "C7", "W5", "Petersen", "MK3", "Grotzsch"]
            .map(String::from)
            .to_vec();
    }
    for name in names {
        let g = named::resolve(&name)?;
        let start = Instant::now();
        let r = circular_altitude_exact(&g, DEFAULT_BUDGET);
        let value = r
            .value
            .map_or_else(|| format!("[{}, {}]", r.lower, r.upper), |v| v.to_string());
        println!(
            "{name}: n = {}, omega = {}, chi = {}, altitude = {value} via {:?} ({:.1?})",
            g.n(),
            clique_number(&g),
            chromatic_number(&g).count,
            r.method,
            start.elapsed()
        );
        if let (Some(o), Some(c)) = (&r.witness_ordering, &r.witness_cycle) {
            println!("  ordering {:?}", o.as_slice());
            println!("  cycle    {c:?}");
        }
    }
    Ok(())
}

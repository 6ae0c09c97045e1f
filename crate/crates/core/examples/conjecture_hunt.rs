//! Anneals over circular orderings of M^3(K6) looking for one whose longest
//! monotonic cycle has at most 8 vertices.
//!
//! cargo run --release --example conjecture_hunt -- [seed] [steps] [restarts]

use circalt::named;
use circalt::search::{anneal_min_max_cycle, AnnealConfig};
use std::time::Instant;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>());
    let seed = args.next().transpose()?.unwrap_or(1);
    let steps = args.next().transpose()?.unwrap_or(200_000);
    let restarts = args.next().transpose()?.unwrap_or(1) as usize;
    let g = named::by_name("M3K6")?;
    let start = Instant::now();
    let report = anneal_min_max_cycle(&g, &AnnealConfig::new(seed, restarts, steps))?;
    println!(
        "M3K6 (n = {}): best {} after {} evaluations in {:.1?}",
        g.n(),
        report.best_value,
        report.evaluations,
        start.elapsed()
    );
    println!("per restart: {:?}", report.restart_best);
    if report.best_value <= 8 {
        println!("ordering: {:?}", report.best_ordering.as_slice());
        println!("cycle: {:?}", report.witness_cycle);
    }
    Ok(())
}

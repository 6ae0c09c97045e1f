//! Runs every claim check and prints a one-line summary per claim.
//!
//! cargo run --release --example theorem_suite -- [seed]

use circalt::theorems::{run_suite, SuiteOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(1);
    let reports = run_suite(&SuiteOptions::new(seed));
    for r in &reports {
        let mark = if r.passed { "ok  " } else { "FAIL" };
        println!(
            "{mark} {:<36} {:>6} cases  {}",
            r.claim, r.cases, r.statement
        );
        for f in r.failures.iter().take(3) {
            println!("       {f}");
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} claims, {failed} failed", reports.len());
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}

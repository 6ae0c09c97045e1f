//! Exact circular chromatic numbers with their (p, q)-colourings.
//!
//! cargo run --release --example circular_colouring -- [graph ...]

use circalt::circular_colouring::{circular_chromatic_number, is_pq_colouring};
use circalt::named;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["C5", "C7", "C9", "K4", "W5", "Petersen", "MK3"]
            .map(String::from)
            .to_vec();
    }
    for name in names {
        let g = named::resolve(&name)?;
        let cc = circular_chromatic_number(&g);
        let c = &cc.colouring;
        println!(
            "{name}: chi_c = {} (floor {}), colouring {:?}, valid {}",
            cc.value,
            cc.value.floor(),
            c.colour,
            is_pq_colouring(&g, &c.colour, c.p, c.q)?
        );
        if !cc.infeasible.is_empty() {
            let below: Vec<String> = cc.infeasible.iter().map(|f| f.to_string()).collect();
            println!("  infeasible: {}", below.join(", "));
        }
    }
    Ok(())
}

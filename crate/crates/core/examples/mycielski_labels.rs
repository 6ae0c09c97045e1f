//! Builds iterated Mycielskians and prints their vertex labels.
//!
//! cargo run --example mycielski_labels -- [base] [r]

use circalt::graph_core::{chromatic_number, emit_graph6, odd_girth};
use circalt::mycielski::{check_adjacency_rules, iterated_mycielskian};
use circalt::named;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let base_name = args.next().unwrap_or_else(|| "K2".into());
    let r: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);
    let base = named::resolve(&base_name)?;
    for level in 0..=r {
        let m = iterated_mycielskian(&base, level)?;
        println!(
            "M^{level}({base_name}): n = {}, edges = {}, chi = {}, odd girth {:?}, rules hold: {}",
            m.n(),
            m.graph.edge_count(),
            chromatic_number(&m.graph).count,
            odd_girth(&m.graph),
            check_adjacency_rules(&m)
        );
    }
    let m = iterated_mycielskian(&base, r)?;
    println!("graph6: {}", emit_graph6(&m.graph)?);
    for v in 0..m.n() {
        let nbrs: Vec<String> = circalt::graph_core::bits(m.graph.neighbours(v))
            .map(|u| m.render(u))
            .collect();
        println!("  {:>10}  {}", m.render(v), nbrs.join(" "));
    }
    Ok(())
}

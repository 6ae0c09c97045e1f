//! Alternating bipartite witnesses inside proper colourings, and the
//! colour-class separation check on small Mycielskians.
//!
//! cargo run --release --example colour_classes -- [seed]

use circalt::circular_colouring::{random_proper_colouring, zhu_hypothesis_check, zigzag_witness};
use circalt::graph_core::chromatic_number;
use circalt::named;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for name in ["MK3", "Grotzsch"] {
        let g = named::by_name(name)?;
        let t = chromatic_number(&g).count;
        let colour = random_proper_colouring(&g, &mut rng);
        let w = zigzag_witness(&g, &colour, t)?;
        println!("{name}: colouring {colour:?}");
        println!("  sequence {:?} with colours {:?}", w.sequence, w.colours);
        println!("  monotonic cycle {:?}", w.monotonic_cycle());
    }
    for name in ["K4", "MK3", "C5"] {
        let g = named::by_name(name)?;
        let m = chromatic_number(&g).count;
        let r = zhu_hypothesis_check(&g, m, 1_000_000)?;
        println!(
            "{name}: {} {m}-colourings, {} components, separation holds: {}",
            r.colourings_enumerated,
            r.components.len(),
            r.holds
        );
    }
    Ok(())
}

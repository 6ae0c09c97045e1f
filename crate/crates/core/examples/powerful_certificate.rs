//! Powerful orderings of iterated Mycielskians and the upper bound they
//! give when the odd girth is large.
//!
//! cargo run --release --example powerful_certificate -- [base] [r]

use circalt::graph_core::chromatic_number;
use circalt::named;
use circalt::powerful::{
    build_powerful_ordering, lemma_report, oddgirth_certificate, verify_powerful,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let base_name = args.next().unwrap_or_else(|| "C7".into());
    let r: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);
    let base = named::resolve(&base_name)?;

    let po = build_powerful_ordering(&base, &chromatic_number(&base).colours, r)?;
    let report = verify_powerful(&po.graph, &po.ordering);
    println!(
        "M^{r}({base_name}): {} vertices, properties hold: {}",
        po.graph.n(),
        report.all()
    );
    println!("order: {}", po.labels().join(" "));
    let lemmas = lemma_report(&po);
    println!(
        "path lemmas hold: {} (longest monotonic path {})",
        lemmas.all(),
        lemmas.longest_path
    );

    match oddgirth_certificate(&base, r) {
        Ok(c) => println!(
            "certificate: t = {}, odd girth {:?}, longest monotonic cycle {} via {:?}",
            c.t, c.odd_girth, c.value, c.cycle
        ),
        Err(e) => println!("no certificate: {e}"),
    }
    Ok(())
}

//! Issues certificates of several kinds, verifies them, then shows that a
//! tampered copy is rejected.
//!
//! cargo run --release --example certificates

use circalt::altitude::{circular_altitude_exact, DEFAULT_BUDGET};
use circalt::certificate::{self, Certificate};
use circalt::named;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = named::by_name("MK3")?;
    let r = circular_altitude_exact(&g, DEFAULT_BUDGET);
    let ordering = r.witness_ordering.expect("exact search yields a witness");
    let cert = Certificate::altitude_upper(&g, &ordering)?;
    println!("{}", serde_json::to_string_pretty(&cert)?);
    println!("verify: {}", certificate::verify(&cert)?);

    let mut forged = cert.clone();
    if let Some(v) = forged.payload.get_mut("value") {
        *v = serde_json::json!(3);
    }
    match certificate::verify(&forged) {
        Ok(msg) => println!("forged copy unexpectedly accepted: {msg}"),
        Err(e) => println!("forged copy rejected: {e}"),
    }
    Ok(())
}

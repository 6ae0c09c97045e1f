//! Self-contained, checksummed certificates. Verification trusts nothing
//! but the graph and the payload: every claimed value is recomputed.

use crate::altitude::{altitude_via_complement, circular_altitude_exact, DEFAULT_BUDGET};
use crate::circular_colouring::{is_pq_colouring, verify_zigzag, ZigzagWitness};
use crate::error::{Error, Result};
use crate::graph_core::{chromatic_number, emit_graph6, is_proper_colouring, parse_graph6, Graph};
use crate::mycielski::iterated_mycielskian;
use crate::orderings::{
    longest_monotonic_cycle, verify_monotonic_cycle, CircularOrdering, LinearOrdering,
};
use crate::powerful::verify_powerful;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    AltitudeUpper,
    AltitudeExact,
    PqColouring,
    Zigzag,
    Powerful,
    Anneal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: Kind,
    /// graph6 of the graph the claim is about.
    pub graph: String,
    pub payload: Value,
    /// SHA-256 of the payload serialised with sorted keys, as hex.
    pub checksum: String,
}

/// Hex SHA-256 of the compact JSON of `payload`; object keys come out
/// sorted because `serde_json::Map` is ordered.
pub fn checksum(payload: &Value) -> String {
    hex::encode(Sha256::digest(payload.to_string().as_bytes()))
}

impl Certificate {
    pub fn new(kind: Kind, g: &Graph, payload: Value) -> Result<Certificate> {
        Ok(Certificate {
            kind,
            graph: emit_graph6(g)?,
            checksum: checksum(&payload),
            payload,
        })
    }

    /// Upper bound from one circular ordering and its longest cycle.
    pub fn altitude_upper(g: &Graph, ordering: &CircularOrdering) -> Result<Certificate> {
        let w = longest_monotonic_cycle(g, ordering);
        Certificate::new(
            Kind::AltitudeUpper,
            g,
            json!({ "value": w.length, "ordering": ordering, "cycle": w.vertices }),
        )
    }
}

fn field<T: for<'de> Deserialize<'de>>(payload: &Value, key: &str) -> Result<T> {
    let v = payload
        .get(key)
        .ok_or_else(|| Error::Certificate(format!("payload lacks {key:?}")))?;
    serde_json::from_value(v.clone()).map_err(|e| Error::Certificate(format!("{key}: {e}")))
}

fn ensure(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Certificate(what.to_string()))
    }
}

/// Checks the ordering's longest cycle equals the claimed `value` and the
/// claimed cycle attains it.
fn check_upper(g: &Graph, payload: &Value) -> Result<usize> {
    let value: usize = field(payload, "value")?;
    let ordering = CircularOrdering::new(field(payload, "ordering")?)
        .map_err(|e| Error::Certificate(e.to_string()))?;
    ensure(ordering.len() == g.n(), "ordering has the wrong length")?;
    let cycle: Vec<usize> = field(payload, "cycle")?;
    ensure(cycle.len() == value, "cycle length differs from value")?;
    ensure(
        verify_monotonic_cycle(g, &ordering, &cycle),
        "cycle is not monotonic",
    )?;
    ensure(
        longest_monotonic_cycle(g, &ordering).length == value,
        "ordering has a longer monotonic cycle",
    )?;
    Ok(value)
}

/// Re-verifies `cert` from scratch. Returns a short description of what
/// was established.
pub fn verify(cert: &Certificate) -> Result<String> {
    ensure(
        checksum(&cert.payload) == cert.checksum,
        "checksum mismatch",
    )?;
    let g = parse_graph6(&cert.graph)?;
    let p = &cert.payload;
    match cert.kind {
        Kind::AltitudeUpper | Kind::Anneal => {
            let v = check_upper(&g, p)?;
            Ok(format!("circular altitude <= {v}"))
        }
        Kind::AltitudeExact => {
            let v = check_upper(&g, p)?;
            let exact = match altitude_via_complement(&g) {
                Some(r) => r.value,
                None => circular_altitude_exact(&g, DEFAULT_BUDGET).value,
            };
            match exact {
                Some(e) if e == v => Ok(format!("circular altitude = {v}")),
                Some(e) => Err(Error::Certificate(format!(
                    "recomputed value is {e}, not {v}"
                ))),
                None => Err(Error::Certificate(
                    "graph too large to re-verify exactly".into(),
                )),
            }
        }
        Kind::PqColouring => {
            let (pp, q): (usize, usize) = (field(p, "p")?, field(p, "q")?);
            let colour: Vec<usize> = field(p, "colour")?;
            ensure(colour.len() == g.n(), "colouring has the wrong length")?;
            ensure(
                is_pq_colouring(&g, &colour, pp, q).unwrap_or(false),
                "not a (p,q)-colouring",
            )?;
            Ok(format!("circular chromatic number <= {pp}/{q}"))
        }
        Kind::Zigzag => {
            let t: usize = field(p, "t")?;
            let colour: Vec<usize> = field(p, "colouring")?;
            let w: ZigzagWitness = field(p, "witness")?;
            ensure(colour.len() == g.n(), "colouring has the wrong length")?;
            ensure(is_proper_colouring(&g, &colour), "colouring is not proper")?;
            ensure(
                verify_zigzag(&g, &colour, &w, t),
                "witness is not alternating",
            )?;
            Ok(format!("alternating K_{{{},{}}}", t.div_ceil(2), t / 2))
        }
        Kind::Powerful => {
            let v = check_upper(&g, p)?;
            let r: usize = field(p, "r")?;
            let base = parse_graph6(&field::<String>(p, "base")?)?;
            let t: usize = field(p, "t")?;
            let m = iterated_mycielskian(&base, r)?;
            ensure(m.graph == g, "graph is not the claimed Mycielskian")?;
            ensure(
                chromatic_number(&base).count + r == t,
                "t is not chi(base) + r",
            )?;
            let lin = LinearOrdering::new(field(p, "ordering")?)?;
            ensure(verify_powerful(&m, &lin).all(), "ordering is not powerful")?;
            ensure(v < t, "cycle value is not below t")?;
            Ok(format!(
                "powerful ordering with longest monotonic cycle {v} < {t}"
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn round_trip_and_tamper() {
        let g = named::cycle(5);
        let o = CircularOrdering::new(vec![0, 2, 4, 1, 3]).unwrap();
        let c = Certificate::altitude_upper(&g, &o).unwrap();
        assert_eq!(verify(&c).unwrap(), "circular altitude <= 2");
        let text = serde_json::to_string(&c).unwrap();
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert!(verify(&back).is_ok());

        let mut bad = c.clone();
        bad.payload["value"] = json!(1);
        assert!(verify(&bad).is_err());
        bad.checksum = checksum(&bad.payload);
        assert!(verify(&bad).is_err());
    }

    #[test]
    fn exact_claims_are_recomputed() {
        let g = named::cycle(5);
        let o = CircularOrdering::new(vec![0, 1, 2, 3, 4]).unwrap();
        let w = longest_monotonic_cycle(&g, &o);
        let c = Certificate::new(
            Kind::AltitudeExact,
            &g,
            json!({ "value": w.length, "ordering": o, "cycle": w.vertices }),
        )
        .unwrap();
        assert!(verify(&c).is_err());
    }
}

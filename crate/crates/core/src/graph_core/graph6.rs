//! graph6 short form (at most 62 vertices).

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_GRAPH6_VERTICES: usize = 62;

fn bit_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = s
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!(
            "malformed character {:?} at offset 0",
            head as char
        )));
    }
    if head == 126 {
        return Err(Error::Graph6("long form (n > 62) is not supported".into()));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let nbits = bit_len(n);
    let nbytes = nbits.div_ceil(6);
    if body.len() < nbytes {
        return Err(Error::Graph6(format!(
            "truncated bit vector: expected {nbytes} characters, found {}",
            body.len()
        )));
    }
    if body.len() > nbytes {
        return Err(Error::Graph6(format!(
            "{} trailing characters after the bit vector",
            body.len() - nbytes
        )));
    }
    for (i, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(Error::Graph6(format!(
                "malformed character {:?} at offset {}",
                c as char,
                i + 1
            )));
        }
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..nbytes * 6 {
        if bit(k) {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_GRAPH6_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut out = String::with_capacity(1 + bit_len(n).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    // Reference strings produced by an independent graph6 encoder.
    #[test]
    fn reference_codec_values() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let k2 = parse_graph6("A_").unwrap();
        assert!(k2.adjacent(0, 1));
        assert_eq!(emit_graph6(&named::complete(1)).unwrap(), "@");
        assert_eq!(emit_graph6(&named::complete(2)).unwrap(), "A_");
        assert_eq!(emit_graph6(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(emit_graph6(&named::cycle(5)).unwrap(), "Dhc");
        assert_eq!(emit_graph6(&named::cycle(7)).unwrap(), "FhCKG");
        assert_eq!(emit_graph6(&named::complete(5)).unwrap(), "D~{");
        assert_eq!(emit_graph6(&named::petersen()).unwrap(), "IheA@GUAo");
        assert_eq!(
            emit_graph6(&named::complete_bipartite(3, 3)).unwrap(),
            "EFz_"
        );
    }

    #[test]
    fn round_trip_corpus() {
        for s in [
            "@",
            "A_",
            "A?",
            "Dhc",
            "D~{",
            "IheA@GUAo",
            "FhCKG",
            "EFz_",
            "Ch",
            "JkLTAQGK?N_",
        ] {
            assert_eq!(emit_graph6(&parse_graph6(s).unwrap()).unwrap(), s);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_graph6("?"), Err(Error::EmptyGraph)));
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D h").is_err());
        assert!(parse_graph6("Dh").is_err());
        assert!(parse_graph6("Dhcc").is_err());
        assert!(parse_graph6("~??~").is_err());
        // K2 with a padding bit set
        assert!(parse_graph6("A`").is_err());
        assert!(emit_graph6(&Graph::empty(63).unwrap()).is_err());
    }
}

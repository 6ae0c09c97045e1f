//! Built-in graphs addressable by name, and seeded random graphs.

use crate::error::{Error, Result};
use crate::graph_core::{parse_graph6, Graph};
use crate::mycielski::iterated_mycielskian;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("n <= 64");
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge(a, b).unwrap();
        }
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut g = Graph::empty(n).expect("n <= 64");
    for a in 0..n {
        g.add_edge(a, (a + 1) % n).unwrap();
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("n <= 64");
    for a in 1..n {
        g.add_edge(a - 1, a).unwrap();
    }
    g
}

/// `C_n` joined to a hub, which gets index `n`.
pub fn wheel(n: usize) -> Graph {
    let mut g = Graph::empty(n + 1).expect("n <= 63");
    for a in 0..n {
        g.add_edge(a, (a + 1) % n).unwrap();
        g.add_edge(a, n).unwrap();
    }
    g
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b).expect("a + b <= 64");
    for x in 0..a {
        for y in a..a + b {
            g.add_edge(x, y).unwrap();
        }
    }
    g
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
        g.add_edge(i + 5, (i + 2) % 5 + 5).unwrap();
    }
    g
}

/// `M(C_5)` in the canonical labelled vertex order.
pub fn grotzsch() -> Graph {
    iterated_mycielskian(&cycle(5), 1).unwrap().graph
}

/// `G(n, p)` from a ChaCha8 stream seeded with `seed`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n).expect("n <= 64");
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

/// Named graphs on at most 7 vertices followed by `random` seeded
/// `G(n, p)` graphs with `n` in 2..=7, each tagged with a name.
pub fn small_corpus(random: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 1..=7 {
        out.push((format!("K{n}"), complete(n)));
        out.push((format!("E{n}"), Graph::empty(n).unwrap()));
        out.push((format!("P{n}"), path(n)));
    }
    for n in 3..=7 {
        out.push((format!("C{n}"), cycle(n)));
    }
    for n in 3..=6 {
        out.push((format!("W{n}"), wheel(n)));
    }
    for a in 1..=3 {
        for b in a..=7 - a {
            out.push((format!("K{a},{b}"), complete_bipartite(a, b)));
        }
    }
    out.push((
        "MK2".into(),
        iterated_mycielskian(&complete(2), 1).unwrap().graph,
    ));
    out.push((
        "MK3".into(),
        iterated_mycielskian(&complete(3), 1).unwrap().graph,
    ));
    for n in 4..=7 {
        out.push((format!("co-C{n}"), cycle(n).complement()));
    }
    for i in 0..random {
        let n = 2 + i % 6;
        let p = [0.3, 0.5, 0.7][i / 6 % 3];
        let s = seed.wrapping_add(i as u64);
        out.push((format!("gnp({n},{p},{s})"), random_gnp(n, p, s)));
    }
    out
}

fn parse_num(s: &str, name: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::UnknownGraph(name.to_string()))
}

/// Resolves names such as `K6`, `C7`, `P4`, `W5`, `K3,3`, `E4` (edgeless),
/// `Petersen`, `Grotzsch`, and Mycielskians `M<r><name>` / `M<name>`
/// (`M3K6`, `MK3`, `M2C7`).
pub fn by_name(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownGraph(name.to_string());
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "petersen" => return Ok(petersen()),
        "grotzsch" | "grötzsch" => return Ok(grotzsch()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('M') {
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        let r = if digits.is_empty() {
            1
        } else {
            parse_num(&digits, name)?
        };
        let inner = &rest[digits.len()..];
        if inner.is_empty() {
            return Err(unknown());
        }
        return Ok(iterated_mycielskian(&by_name(inner)?, r)?.graph);
    }
    let (kind, arg) = name.split_at(1);
    if arg.is_empty() {
        return Err(unknown());
    }
    let g = match kind {
        "K" => match arg.split_once(',') {
            Some((a, b)) => complete_bipartite(parse_num(a, name)?, parse_num(b, name)?),
            None => complete(parse_num(arg, name)?),
        },
        "C" => {
            let n = parse_num(arg, name)?;
            if n < 3 {
                return Err(unknown());
            }
            cycle(n)
        }
        "P" => path(parse_num(arg, name)?),
        "W" => {
            let n = parse_num(arg, name)?;
            if n < 3 {
                return Err(unknown());
            }
            wheel(n)
        }
        "E" => Graph::empty(parse_num(arg, name)?)?,
        _ => return Err(unknown()),
    };
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(g)
}

/// Named graph, or a graph6 string.
pub fn resolve(text: &str) -> Result<Graph> {
    match by_name(text) {
        Ok(g) => Ok(g),
        Err(Error::UnknownGraph(_)) => parse_graph6(text),
        Err(e) => Err(e),
    }
}

/// When `name` denotes a Mycielskian `M^r(H)`, returns `(H, r)`.
pub fn mycielski_parts(name: &str) -> Option<(Graph, usize)> {
    let rest = name.strip_prefix('M')?;
    let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
    let r = if digits.is_empty() {
        1
    } else {
        digits.parse().ok()?
    };
    let inner = &rest[digits.len()..];
    match mycielski_parts(inner) {
        Some((base, r2)) => Some((base, r + r2)),
        None => Some((by_name(inner).ok()?, r)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(by_name("K6").unwrap().edge_count(), 15);
        assert_eq!(by_name("K3,3").unwrap(), complete_bipartite(3, 3));
        assert_eq!(by_name("W5").unwrap().n(), 6);
        assert_eq!(by_name("M3K6").unwrap().n(), 55);
        assert_eq!(by_name("MK3").unwrap().n(), 7);
        assert_eq!(
            by_name("MMK2").unwrap().edge_count(),
            by_name("M2K2").unwrap().edge_count()
        );
        assert_eq!(by_name("Grotzsch").unwrap().n(), 11);
        assert!(by_name("X9").is_err());
        assert!(by_name("C2").is_err());
        assert_eq!(resolve("Dhc").unwrap(), cycle(5));
        let (base, r) = mycielski_parts("M2MC7").unwrap();
        assert_eq!((base, r), (cycle(7), 3));
        assert!(mycielski_parts("K6").is_none());
    }

    #[test]
    fn wheel_shape() {
        let w = wheel(5);
        assert_eq!(w.degree(5), 5);
        assert_eq!(w.edge_count(), 10);
    }

    #[test]
    fn random_graphs_are_reproducible() {
        assert_eq!(random_gnp(10, 0.4, 7), random_gnp(10, 0.4, 7));
        assert!(random_gnp(10, 0.4, 7).is_well_formed());
    }
}

use crate::error::{Error, Result};
use crate::graph_core::{bits, chromatic_number, Graph};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// Positive rational `p/q` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    pub p: u64,
    pub q: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Fraction {
    pub fn new(p: u64, q: u64) -> Fraction {
        assert!(p > 0 && q > 0, "fraction terms must be positive");
        let d = gcd(p, q);
        Fraction { p: p / d, q: q / d }
    }

    pub fn floor(self) -> usize {
        (self.p / self.q) as usize
    }
}

impl Ord for Fraction {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.p as u128 * o.q as u128).cmp(&(o.p as u128 * self.q as u128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PQColouring {
    pub p: usize,
    pub q: usize,
    /// Colours in `1..=p`.
    pub colour: Vec<usize>,
}

/// `q <= |c(u) - c(v)| <= p - q` on every edge.
pub fn is_pq_colouring(g: &Graph, colour: &[usize], p: usize, q: usize) -> Result<bool> {
    if colour.len() != g.n() {
        return Err(Error::InvalidColouring(format!(
            "{} colours for {} vertices",
            colour.len(),
            g.n()
        )));
    }
    if let Some(v) = colour.iter().position(|&c| c < 1 || c > p) {
        return Err(Error::InvalidColouring(format!(
            "vertex {v} has colour {} outside 1..={p}",
            colour[v]
        )));
    }
    Ok(g.edges().iter().all(|&(a, b)| {
        let d = colour[a].abs_diff(colour[b]);
        q <= d && d + q <= p
    }))
}

struct PqSearch<'a> {
    g: &'a Graph,
    p: usize,
    /// `conflict[x]`: colours (bit `c - 1`) too close to colour `x` on the
    /// circle of length `p`.
    conflict: Vec<u64>,
    colour: Vec<usize>,
    uncoloured: u64,
}

impl PqSearch<'_> {
    fn domain(&self, v: usize) -> u64 {
        let mut d = crate::graph_core::low_mask(self.p);
        for u in bits(self.g.neighbours(v) & !self.uncoloured) {
            d &= !self.conflict[self.colour[u]];
        }
        d
    }

    fn solve(&mut self) -> bool {
        if self.uncoloured == 0 {
            return true;
        }
        // Smallest domain, then most uncoloured neighbours, then index.
        let mut pick = None;
        let mut key = (u32::MAX, 0i64);
        for v in bits(self.uncoloured) {
            let d = self.domain(v);
            let k = (
                d.count_ones(),
                -((self.g.neighbours(v) & self.uncoloured).count_ones() as i64),
            );
            if k < key {
                key = k;
                pick = Some((v, d));
            }
        }
        let (v, mut dom) = pick.unwrap();
        // Colourings are invariant under rotation, so the first vertex
        // placed takes colour 1.
        if self.uncoloured == self.g.vertex_mask() {
            dom &= 1;
        }
        self.uncoloured &= !(1u64 << v);
        for c in bits(dom) {
            self.colour[v] = c + 1;
            if self.solve() {
                return true;
            }
        }
        self.colour[v] = 0;
        self.uncoloured |= 1u64 << v;
        false
    }
}

/// Complete backtracking search for a `(p, q)`-colouring.
pub fn find_pq_colouring(g: &Graph, p: usize, q: usize) -> Option<PQColouring> {
    if p == 0 || q == 0 || p > 64 {
        return None;
    }
    if !g.has_edge() {
        return Some(PQColouring {
            p,
            q,
            colour: vec![1; g.n()],
        });
    }
    if 2 * q > p {
        return None;
    }
    let conflict = (0..=p)
        .map(|x| {
            (1..=p).fold(0u64, |m, c| {
                let d = c.abs_diff(x);
                if x > 0 && (d < q || d + q > p) {
                    m | 1 << (c - 1)
                } else {
                    m
                }
            })
        })
        .collect();
    let mut s = PqSearch {
        g,
        p,
        conflict,
        colour: vec![0; g.n()],
        uncoloured: g.vertex_mask(),
    };
    s.solve().then_some(PQColouring {
        p,
        q,
        colour: s.colour,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircularChromatic {
    pub value: Fraction,
    pub colouring: PQColouring,
    /// Fractions rejected before the answer, in the order tried.
    pub infeasible: Vec<Fraction>,
}

/// Candidates `p/q` with `chi - 1 < p/q <= chi` and `p <= n`, ascending.
pub fn candidate_fractions(chi: usize, n: usize) -> Vec<Fraction> {
    let mut out = Vec::new();
    for p in 1..=n.max(chi) as u64 {
        for q in 1..=p {
            let (lo, hi) = ((chi as u64 - 1) * q, chi as u64 * q);
            if p > lo && p <= hi && gcd(p, q) == 1 {
                out.push(Fraction { p, q });
            }
        }
    }
    out.sort();
    out
}

/// Exact circular chromatic number: the least feasible candidate fraction.
pub fn circular_chromatic_number(g: &Graph) -> CircularChromatic {
    let chi = chromatic_number(g);
    if chi.count <= 1 {
        return CircularChromatic {
            value: Fraction::new(1, 1),
            colouring: PQColouring {
                p: 1,
                q: 1,
                colour: vec![1; g.n()],
            },
            infeasible: Vec::new(),
        };
    }
    let mut infeasible = Vec::new();
    for f in candidate_fractions(chi.count, g.n()) {
        if f.q == 1 {
            return CircularChromatic {
                value: f,
                colouring: PQColouring {
                    p: chi.count,
                    q: 1,
                    colour: chi.colours,
                },
                infeasible,
            };
        }
        match find_pq_colouring(g, f.p as usize, f.q as usize) {
            Some(c) => {
                return CircularChromatic {
                    value: f,
                    colouring: c,
                    infeasible,
                }
            }
            None => infeasible.push(f),
        }
    }
    unreachable!("chi/1 is always a candidate")
}

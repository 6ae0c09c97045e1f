//! Alternating complete bipartite subgraphs in properly coloured graphs.
//!
//! For `M^r(G)` with `t = chi(G) + r`, every proper colouring by linearly
//! ordered colours contains `K_{ceil(t/2), floor(t/2)}` whose `t` colours are
//! distinct and alternate between the sides. The search below looks for one
//! directly; its failure is a contradiction, never an expected outcome.

use crate::error::{Error, Result};
use crate::graph_core::{bits, is_proper_colouring, Graph};
use crate::orderings::{induced_colouring, LinearOrdering};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigzagWitness {
    /// Vertices in increasing colour order; even indices form side A.
    pub sequence: Vec<usize>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub colours: Vec<usize>,
}

impl ZigzagWitness {
    /// The alternating vertices as a cycle with strictly increasing
    /// colours: all `t` of them for even `t`, the first `t - 1` for odd.
    pub fn monotonic_cycle(&self) -> Vec<usize> {
        let t = self.sequence.len();
        self.sequence[..t - t % 2].to_vec()
    }
}

struct Search<'a> {
    g: &'a Graph,
    colour: &'a [usize],
    t: usize,
    seq: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let k = self.seq.len();
        if k == self.t {
            return true;
        }
        // A new vertex must see every chosen vertex on the other side.
        let mut cand = self.g.vertex_mask();
        for (i, &x) in self.seq.iter().enumerate() {
            if i % 2 != k % 2 {
                cand &= self.g.neighbours(x);
            }
        }
        let floor = self.seq.last().map(|&x| self.colour[x]);
        for v in bits(cand) {
            if floor.is_some_and(|f| self.colour[v] <= f) {
                continue;
            }
            self.seq.push(v);
            if self.extend() {
                return true;
            }
            self.seq.pop();
        }
        false
    }
}

/// Lexicographically least (by vertex sequence) alternating witness on `t`
/// colours.
pub fn zigzag_witness(g: &Graph, colour: &[usize], t: usize) -> Result<ZigzagWitness> {
    if !is_proper_colouring(g, colour) {
        return Err(Error::InvalidColouring("not a proper colouring".into()));
    }
    if t == 0 {
        return Err(Error::Hypothesis("t must be positive".into()));
    }
    let mut s = Search {
        g,
        colour,
        t,
        seq: Vec::with_capacity(t),
    };
    if !s.extend() {
        return Err(Error::TheoremViolation(format!(
            "no alternating K_{{{},{}}} with {t} increasing colours",
            t.div_ceil(2),
            t / 2
        )));
    }
    let seq = s.seq;
    Ok(ZigzagWitness {
        side_a: seq.iter().step_by(2).copied().collect(),
        side_b: seq.iter().skip(1).step_by(2).copied().collect(),
        colours: seq.iter().map(|&v| colour[v]).collect(),
        sequence: seq,
    })
}

/// A proper colouring drawn by first-fit along a random ordering, with the
/// colours then mapped injectively and at random into `1..=2k`.
pub fn random_proper_colouring<R: rand::Rng>(g: &Graph, rng: &mut R) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let first_fit = induced_colouring(g, &LinearOrdering::new(order).unwrap()).colour;
    let k = first_fit.iter().copied().max().unwrap_or(0);
    let mut palette: Vec<usize> = (1..=2 * k).collect();
    palette.shuffle(rng);
    first_fit.iter().map(|&c| palette[c - 1]).collect()
}

/// Structural check of a witness against `g` and `colour`.
pub fn verify_zigzag(g: &Graph, colour: &[usize], w: &ZigzagWitness, t: usize) -> bool {
    let seq = &w.sequence;
    if seq.len() != t || colour.len() != g.n() || seq.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let a: Vec<usize> = seq.iter().step_by(2).copied().collect();
    let b: Vec<usize> = seq.iter().skip(1).step_by(2).copied().collect();
    if a != w.side_a || b != w.side_b || a.len() != t.div_ceil(2) || b.len() != t / 2 {
        return false;
    }
    let cols: Vec<usize> = seq.iter().map(|&v| colour[v]).collect();
    cols == w.colours
        && cols.windows(2).all(|p| p[0] < p[1])
        && a.iter().all(|&x| b.iter().all(|&y| g.adjacent(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mycielski::{iterated_mycielskian, MycLabel};
    use crate::named;
    use crate::orderings::verify_monotonic_cycle;

    #[test]
    fn mk3_with_apex_first_colouring() {
        let m = iterated_mycielskian(&named::complete(3), 1).unwrap();
        let colour: Vec<usize> = (0..m.n())
            .map(|x| match m.label(x) {
                MycLabel::W { .. } => 1,
                MycLabel::Base { vertex, .. } => vertex + 2,
            })
            .collect();
        let w = zigzag_witness(&m.graph, &colour, 4).unwrap();
        assert!(verify_zigzag(&m.graph, &colour, &w, 4));
        assert_eq!(w.colours, [1, 2, 3, 4]);
    }

    #[test]
    fn c5_every_three_colouring() {
        let g = named::by_name("MK2").unwrap();
        let mut colour = vec![1; 5];
        let mut checked = 0;
        for code in 0..3usize.pow(5) {
            let mut x = code;
            for c in colour.iter_mut() {
                *c = x % 3 + 1;
                x /= 3;
            }
            if is_proper_colouring(&g, &colour) {
                let w = zigzag_witness(&g, &colour, 3).unwrap();
                assert!(verify_zigzag(&g, &colour, &w, 3));
                checked += 1;
            }
        }
        assert_eq!(checked, 30);
    }

    #[test]
    fn grotzsch_induced_colouring_gives_monotonic_four_cycle() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = named::grotzsch();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let mut p: Vec<usize> = (0..11).collect();
            p.shuffle(&mut rng);
            let lin = LinearOrdering::new(p).unwrap();
            let c = induced_colouring(&g, &lin);
            let w = zigzag_witness(&g, &c.colour, 4).unwrap();
            let cyc = w.monotonic_cycle();
            assert_eq!(cyc.len(), 4);
            assert!(verify_monotonic_cycle(&g, &lin.close(), &cyc));
        }
    }

    #[test]
    fn impossible_target_is_a_violation() {
        let g = named::cycle(6);
        let c = [1, 2, 1, 2, 1, 2];
        assert!(matches!(
            zigzag_witness(&g, &c, 3),
            Err(Error::TheoremViolation(_))
        ));
        assert!(zigzag_witness(&g, &[1, 1, 1, 2, 1, 2], 2).is_err());
    }
}

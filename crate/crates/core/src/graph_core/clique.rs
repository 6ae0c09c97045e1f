//! Maximum clique by branch and bound with a greedy-colouring bound.

use super::{bits, Graph};

/// Descending degree, ties by index.
pub(crate) fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

struct Search<'a> {
    g: &'a Graph,
    rank: Vec<usize>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    /// Greedy colour classes of `cand` visited in `rank` order; returns the
    /// vertices with their colour bound, highest bound last.
    fn colour_bound(&self, cand: u64) -> Vec<(usize, usize)> {
        let mut verts: Vec<usize> = bits(cand).collect();
        verts.sort_by_key(|&v| self.rank[v]);
        let mut out = Vec::with_capacity(verts.len());
        let mut uncoloured = verts;
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut class_nbrs = 0u64;
            let mut rest = Vec::new();
            for v in uncoloured {
                if class_nbrs >> v & 1 == 0 {
                    class_nbrs |= self.g.neighbours(v);
                    out.push((v, colour));
                } else {
                    rest.push(v);
                }
            }
            uncoloured = rest;
        }
        out
    }

    fn expand(&mut self, mut cand: u64) {
        let coloured = self.colour_bound(cand);
        for &(v, bound) in coloured.iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = cand & self.g.neighbours(v);
            if next == 0 {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand &= !(1u64 << v);
        }
    }
}

/// One maximum clique, sorted.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let order = degree_order(g);
    let mut rank = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut s = Search {
        g,
        rank,
        best: vec![order[0]],
        current: Vec::new(),
    };
    s.expand(g.vertex_mask());
    let mut best = s.best;
    best.sort_unstable();
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

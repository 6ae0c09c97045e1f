//! Exact chromatic number: DSATUR upper bound, maximum-clique lower bound,
//! and a DSATUR-ordered branch and bound with forward checking between them.

use super::{bits, clique::max_clique, Graph};
use serde::Serialize;

/// A proper colouring with colours `1..=count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Colouring {
    pub colours: Vec<usize>,
    pub count: usize,
}

impl Colouring {
    /// Vertices grouped by colour, class `i` holding colour `i + 1`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.colours.iter().enumerate() {
            out[c - 1].push(v);
        }
        out
    }
}

pub fn is_proper_colouring(g: &Graph, colours: &[usize]) -> bool {
    colours.len() == g.n() && g.edges().iter().all(|&(a, b)| colours[a] != colours[b])
}

struct State<'a> {
    g: &'a Graph,
    colour: Vec<usize>,
    nb_count: Vec<[u8; 65]>,
    sat: Vec<u64>,
    uncoloured: u64,
}

impl<'a> State<'a> {
    fn new(g: &'a Graph) -> Self {
        State {
            g,
            colour: vec![0; g.n()],
            nb_count: vec![[0; 65]; g.n()],
            sat: vec![0; g.n()],
            uncoloured: g.vertex_mask(),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        self.uncoloured &= !(1u64 << v);
        for u in bits(self.g.neighbours(v)) {
            self.nb_count[u][c] += 1;
            self.sat[u] |= 1 << c;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = 0;
        self.uncoloured |= 1u64 << v;
        for u in bits(self.g.neighbours(v)) {
            self.nb_count[u][c] -= 1;
            if self.nb_count[u][c] == 0 {
                self.sat[u] &= !(1 << c);
            }
        }
    }

    /// Highest saturation, then most uncoloured neighbours, then lowest index.
    fn select(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0u32, 0u32);
        for v in bits(self.uncoloured) {
            let k = (
                self.sat[v].count_ones(),
                (self.g.neighbours(v) & self.uncoloured).count_ones(),
            );
            if best == usize::MAX || k > key {
                best = v;
                key = k;
            }
        }
        best
    }
}

/// Greedy DSATUR colouring.
pub fn dsatur_colouring(g: &Graph) -> Colouring {
    let mut s = State::new(g);
    let mut count = 0;
    while s.uncoloured != 0 {
        let v = s.select();
        let c = (1..).find(|&c| s.sat[v] >> c & 1 == 0).unwrap();
        count = count.max(c);
        s.assign(v, c);
    }
    Colouring {
        colours: s.colour,
        count,
    }
}

struct Exact<'a> {
    s: State<'a>,
    lower: usize,
    upper: usize,
    best: Vec<usize>,
}

impl Exact<'_> {
    /// Returns true once the lower bound has been met.
    fn search(&mut self, used: usize) -> bool {
        if self.s.uncoloured == 0 {
            self.upper = used;
            self.best = self.s.colour.clone();
            return self.upper == self.lower;
        }
        let v = self.s.select();
        for c in 1..=used + 1 {
            if c >= self.upper {
                break;
            }
            if self.s.sat[v] >> c & 1 == 1 {
                continue;
            }
            self.s.assign(v, c);
            // Forward check against the current target of upper - 1 colours.
            let target = self.upper - 1;
            let palette = ((1u64 << target) - 1) << 1;
            let wiped = bits(self.g_neighbours(v) & self.s.uncoloured)
                .any(|u| self.s.sat[u] & palette == palette);
            if !wiped && self.search(used.max(c)) {
                self.s.unassign(v);
                return true;
            }
            self.s.unassign(v);
        }
        false
    }

    fn g_neighbours(&self, v: usize) -> u64 {
        self.s.g.neighbours(v)
    }
}

/// Exact chromatic number together with one optimal colouring.
pub fn chromatic_number(g: &Graph) -> Colouring {
    if g.n() == 0 {
        return Colouring {
            colours: Vec::new(),
            count: 0,
        };
    }
    let heuristic = dsatur_colouring(g);
    let clique = max_clique(g);
    if heuristic.count == clique.len() {
        return heuristic;
    }
    let mut s = State::new(g);
    for (i, &v) in clique.iter().enumerate() {
        s.assign(v, i + 1);
    }
    let mut ex = Exact {
        s,
        lower: clique.len(),
        upper: heuristic.count,
        best: heuristic.colours,
    };
    ex.search(clique.len());
    Colouring {
        colours: ex.best,
        count: ex.upper,
    }
}

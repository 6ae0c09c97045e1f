//! Linear and circular vertex orderings, induced colourings, and the
//! longest-monotonic-cycle kernel.
//!
//! A cycle `u_1 .. u_k` is monotonic for a circular ordering when walking
//! clockwise from `u_1` meets `u_2, .., u_k` in turn before returning to
//! `u_1`, i.e. the clockwise gaps between consecutive vertices sum to `n`.
//! Edges count as monotonic 2-cycles; an edgeless graph scores 1.

use crate::error::{Error, Result};
use crate::graph_core::{bits, is_permutation, Graph};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearOrdering(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CircularOrdering(Vec<usize>);

fn positions_of(perm: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

impl LinearOrdering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        if !is_permutation(&perm, perm.len()) {
            return Err(Error::NotAPermutation(perm.len()));
        }
        Ok(LinearOrdering(perm))
    }

    pub fn identity(n: usize) -> Self {
        LinearOrdering((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn positions(&self) -> Vec<usize> {
        positions_of(&self.0)
    }

    /// Reads the sequence clockwise, first element at position 0.
    pub fn close(&self) -> CircularOrdering {
        CircularOrdering(self.0.clone())
    }
}

impl CircularOrdering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        if !is_permutation(&perm, perm.len()) {
            return Err(Error::NotAPermutation(perm.len()));
        }
        Ok(CircularOrdering(perm))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn positions(&self) -> Vec<usize> {
        positions_of(&self.0)
    }

    /// Rotation with vertex 0 at position 0.
    pub fn canonical(&self) -> CircularOrdering {
        match self.0.iter().position(|&v| v == 0) {
            Some(i) => {
                let mut p = self.0.clone();
                p.rotate_left(i);
                CircularOrdering(p)
            }
            None => self.clone(),
        }
    }

    /// Counter-clockwise reading, canonicalised.
    pub fn reversed(&self) -> CircularOrdering {
        let mut p = self.0.clone();
        p.reverse();
        CircularOrdering(p).canonical()
    }

    pub fn rotated(&self, k: usize) -> CircularOrdering {
        let mut p = self.0.clone();
        if !p.is_empty() {
            let len = p.len();
            p.rotate_left(k % len);
        }
        CircularOrdering(p)
    }
}

/// One of the two linear orderings read off a circular ordering at `start`.
pub fn linearize(o: &CircularOrdering, start: usize, clockwise: bool) -> Result<LinearOrdering> {
    let n = o.len();
    let i =
        o.0.iter()
            .position(|&v| v == start)
            .ok_or(Error::VertexOutOfRange(start))?;
    let perm = (0..n)
        .map(|k| {
            if clockwise {
                o.0[(i + k) % n]
            } else {
                o.0[(i + n - k) % n]
            }
        })
        .collect();
    Ok(LinearOrdering(perm))
}

/// Colour of `v` is the number of vertices on a longest monotonic path
/// ending at `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedColouring {
    pub colour: Vec<usize>,
}

impl InducedColouring {
    pub fn max_colour(&self) -> usize {
        self.colour.iter().copied().max().unwrap_or(0)
    }
}

pub fn induced_colouring(g: &Graph, o: &LinearOrdering) -> InducedColouring {
    let mut colour = vec![0usize; g.n()];
    let mut seen = 0u64;
    for &v in &o.0 {
        colour[v] = 1 + bits(g.neighbours(v) & seen)
            .map(|u| colour[u])
            .max()
            .unwrap_or(0);
        seen |= 1 << v;
    }
    InducedColouring { colour }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicWitness {
    pub length: usize,
    pub vertices: Vec<usize>,
}

/// Longest monotonic path with a witness. Each step back picks the
/// smallest-index predecessor achieving the DP value.
pub fn longest_monotonic_path(g: &Graph, o: &LinearOrdering) -> MonotonicWitness {
    if g.n() == 0 {
        return MonotonicWitness {
            length: 0,
            vertices: Vec::new(),
        };
    }
    let c = induced_colouring(g, o);
    let pos = o.positions();
    let end = (0..g.n())
        .max_by_key(|&v| (c.colour[v], std::cmp::Reverse(v)))
        .unwrap();
    let mut path = vec![end];
    let mut cur = end;
    while c.colour[cur] > 1 {
        cur = bits(g.neighbours(cur))
            .find(|&u| pos[u] < pos[cur] && c.colour[u] + 1 == c.colour[cur])
            .expect("induced colouring has a predecessor");
        path.push(cur);
    }
    path.reverse();
    MonotonicWitness {
        length: path.len(),
        vertices: path,
    }
}

/// Longest monotonic cycle with a witness.
///
/// For every anchor `s` the ordering is read clockwise from `s` and the
/// longest increasing path from `s` to each later vertex is computed; a
/// neighbour of `s` reached by a path of `k` vertices closes a monotonic
/// `k`-cycle. Anchors are tried in increasing vertex index and only a
/// strictly longer cycle replaces the current witness.
pub fn longest_monotonic_cycle(g: &Graph, o: &CircularOrdering) -> MonotonicWitness {
    let n = g.n();
    assert_eq!(o.len(), n, "ordering does not match graph");
    if n == 0 {
        return MonotonicWitness {
            length: 0,
            vertices: Vec::new(),
        };
    }
    if !g.has_edge() {
        return MonotonicWitness {
            length: 1,
            vertices: vec![o.0[0]],
        };
    }
    let pos = o.positions();
    let mut f = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut best = MonotonicWitness {
        length: 0,
        vertices: Vec::new(),
    };
    for s in 0..n {
        if g.neighbours(s) == 0 {
            continue;
        }
        f.iter_mut().for_each(|x| *x = 0);
        f[s] = 1;
        let a = pos[s];
        for k in 1..n {
            let x = o.0[(a + k) % n];
            let mut fx = 0;
            let mut px = usize::MAX;
            for y in bits(g.neighbours(x)) {
                if f[y] > fx {
                    fx = f[y];
                    px = y;
                }
            }
            if fx > 0 {
                f[x] = fx + 1;
                parent[x] = px;
            }
        }
        let Some(close) = bits(g.neighbours(s)).max_by_key(|&v| (f[v], std::cmp::Reverse(v)))
        else {
            continue;
        };
        if f[close] > best.length {
            let mut cyc = vec![close];
            let mut cur = close;
            while cur != s {
                cur = parent[cur];
                cyc.push(cur);
            }
            cyc.reverse();
            best = MonotonicWitness {
                length: cyc.len(),
                vertices: cyc,
            };
        }
    }
    best
}

/// Independent check of a claimed monotonic cycle. A single vertex is
/// accepted as the length-1 witness of an edgeless graph only.
pub fn verify_monotonic_cycle(g: &Graph, o: &CircularOrdering, cycle: &[usize]) -> bool {
    let n = g.n();
    if o.len() != n || !is_permutation(o.as_slice(), n) {
        return false;
    }
    if cycle.iter().any(|&v| v >= n) {
        return false;
    }
    match cycle.len() {
        0 => false,
        1 => !g.has_edge(),
        2 => g.adjacent(cycle[0], cycle[1]),
        k => {
            let mut seen = 0u64;
            for &v in cycle {
                if seen >> v & 1 == 1 {
                    return false;
                }
                seen |= 1 << v;
            }
            let pos = o.positions();
            let mut gaps = 0;
            for i in 0..k {
                let (a, b) = (cycle[i], cycle[(i + 1) % k]);
                if !g.adjacent(a, b) {
                    return false;
                }
                gaps += (pos[b] + n - pos[a]) % n;
            }
            gaps == n
        }
    }
}

/// Value-only evaluator over positional bitsets, with caller-owned scratch so
/// many orderings can be scored without allocation.
///
/// Per anchor, `levels[k]` holds the processed positions whose longest
/// increasing path from the anchor has exactly `k` vertices; a new position
/// lands one above the highest level containing one of its neighbours.
#[derive(Debug, Clone)]
pub struct CycleEvaluator {
    n: usize,
    padj: Vec<u64>,
    levels: Vec<u64>,
}

/// Best cycle length through one anchor and how many closing neighbours
/// attain it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AnchorScore {
    pub best: u32,
    pub count: u32,
}

impl CycleEvaluator {
    pub fn new(n: usize) -> Self {
        CycleEvaluator {
            n,
            padj: vec![0; n],
            levels: vec![0; n + 2],
        }
    }

    /// Loads `perm` (vertex at each position) for subsequent anchor queries.
    pub fn load(&mut self, g: &Graph, perm: &[usize]) {
        debug_assert_eq!(perm.len(), self.n);
        let pos = positions_of(perm);
        for (p, &v) in perm.iter().enumerate() {
            self.padj[p] = bits(g.neighbours(v)).fold(0, |m, u| m | 1 << pos[u]);
        }
    }

    /// Refreshes the rows of positions `p` and `q` after their vertices were
    /// swapped in `perm`.
    pub fn swap_positions(&mut self, p: usize, q: usize) {
        self.padj.swap(p, q);
        let (bp, bq) = (1u64 << p, 1u64 << q);
        for row in self.padj.iter_mut() {
            let hp = *row & bp != 0;
            let hq = *row & bq != 0;
            if hp != hq {
                *row ^= bp | bq;
            }
        }
    }

    pub fn anchor(&mut self, a: usize) -> AnchorScore {
        let n = self.n;
        let closing = self.padj[a];
        if closing == 0 {
            return AnchorScore { best: 1, count: 0 };
        }
        let levels = &mut self.levels;
        levels[1] = 1 << a;
        let mut top = 1;
        for i in 1..n {
            let p = if a + i >= n { a + i - n } else { a + i };
            let nb = self.padj[p];
            let mut k = top;
            while k > 0 && nb & levels[k] == 0 {
                k -= 1;
            }
            if k > 0 {
                if k == top {
                    top += 1;
                    levels[top] = 0;
                }
                levels[k + 1] |= 1 << p;
            }
        }
        let mut k = top;
        while k > 1 && closing & levels[k] == 0 {
            k -= 1;
        }
        AnchorScore {
            best: k as u32,
            count: (closing & levels[k]).count_ones(),
        }
    }

    /// Longest monotonic cycle and the number of (anchor, closing
    /// neighbour) pairs attaining it.
    pub fn score(&mut self) -> AnchorScore {
        let mut out = AnchorScore { best: 0, count: 0 };
        for a in 0..self.n {
            let s = self.anchor(a);
            if s.best > out.best {
                out = s;
            } else if s.best == out.best {
                out.count += s.count;
            }
        }
        out
    }

    /// Longest monotonic cycle, abandoning once it reaches `cutoff`.
    pub fn value_below(&mut self, cutoff: u32) -> u32 {
        let mut best = 0;
        for a in 0..self.n {
            best = best.max(self.anchor(a).best);
            if best >= cutoff {
                break;
            }
        }
        best
    }

    pub fn evaluate(&mut self, g: &Graph, perm: &[usize]) -> u32 {
        self.load(g, perm);
        self.score().best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn circ(p: &[usize]) -> CircularOrdering {
        CircularOrdering::new(p.to_vec()).unwrap()
    }

    #[test]
    fn linearize_examples() {
        let o = circ(&[0, 1, 2, 3, 4]);
        assert_eq!(linearize(&o, 2, true).unwrap().as_slice(), &[2, 3, 4, 0, 1]);
        assert_eq!(
            linearize(&o, 2, false).unwrap().as_slice(),
            &[2, 1, 0, 4, 3]
        );
        assert_eq!(linearize(&o, 0, true).unwrap().as_slice(), o.as_slice());
        assert!(linearize(&o, 7, true).is_err());
    }

    #[test]
    fn induced_colouring_examples() {
        let k3 = named::complete(3);
        let c = induced_colouring(&k3, &LinearOrdering::identity(3));
        assert_eq!(c.colour, [1, 2, 3]);
        let c5 = named::cycle(5);
        let c = induced_colouring(&c5, &LinearOrdering::identity(5));
        assert_eq!(c.colour, [1, 2, 3, 4, 5]);
        let e = Graph::empty(4).unwrap();
        let c = induced_colouring(&e, &LinearOrdering::new(vec![2, 0, 3, 1]).unwrap());
        assert_eq!(c.colour, [1, 1, 1, 1]);
    }

    #[test]
    fn longest_path_examples() {
        let k4 = named::complete(4);
        assert_eq!(
            longest_monotonic_path(&k4, &LinearOrdering::new(vec![3, 1, 0, 2]).unwrap()).length,
            4
        );
        let c5 = named::cycle(5);
        let w = longest_monotonic_path(&c5, &LinearOrdering::new(vec![0, 2, 4, 1, 3]).unwrap());
        assert_eq!(w.length, 3);
        assert_eq!(w.vertices, [0, 4, 3]);
        let e = Graph::empty(3).unwrap();
        assert_eq!(
            longest_monotonic_path(&e, &LinearOrdering::identity(3)).length,
            1
        );
    }

    #[test]
    fn longest_cycle_examples() {
        let c5 = named::cycle(5);
        let w = longest_monotonic_cycle(&c5, &circ(&[0, 1, 2, 3, 4]));
        assert_eq!(w.length, 5);
        assert_eq!(w.vertices, [0, 1, 2, 3, 4]);
        let o = circ(&[0, 2, 4, 1, 3]);
        let w = longest_monotonic_cycle(&c5, &o);
        assert_eq!(w.length, 2);
        assert!(verify_monotonic_cycle(&c5, &o, &w.vertices));
        let k3 = named::complete(3);
        for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2]] {
            assert_eq!(longest_monotonic_cycle(&k3, &circ(&p)).length, 3);
        }
        let e = Graph::empty(3).unwrap();
        let w = longest_monotonic_cycle(&e, &circ(&[1, 0, 2]));
        assert_eq!(w.length, 1);
        assert!(verify_monotonic_cycle(&e, &circ(&[1, 0, 2]), &w.vertices));
    }

    #[test]
    fn verify_examples() {
        let c5 = named::cycle(5);
        let id = circ(&[0, 1, 2, 3, 4]);
        assert!(verify_monotonic_cycle(&c5, &id, &[0, 1, 2, 3, 4]));
        assert!(verify_monotonic_cycle(&c5, &id, &[2, 3, 4, 0, 1]));
        assert!(!verify_monotonic_cycle(&c5, &id, &[0, 2, 4, 1, 3]));
        // Counter-clockwise traversal wraps twice.
        assert!(!verify_monotonic_cycle(&c5, &id, &[4, 3, 2, 1, 0]));
        let pent = circ(&[0, 2, 4, 1, 3]);
        for (a, b) in c5.edges() {
            assert!(verify_monotonic_cycle(&c5, &pent, &[a, b]));
            assert!(verify_monotonic_cycle(&c5, &pent, &[b, a]));
        }
        assert!(!verify_monotonic_cycle(&c5, &id, &[0, 0]));
        assert!(!verify_monotonic_cycle(&c5, &id, &[0]));
    }

    #[test]
    fn evaluator_matches_witness_dp() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for seed in 0..40 {
            let g = named::random_gnp(12, 0.35, seed);
            let mut ev = CycleEvaluator::new(12);
            for _ in 0..20 {
                let mut p: Vec<usize> = (0..12).collect();
                p.shuffle(&mut rng);
                let w = longest_monotonic_cycle(&g, &circ(&p));
                assert_eq!(ev.evaluate(&g, &p) as usize, w.length);
                assert!(verify_monotonic_cycle(&g, &circ(&p), &w.vertices));
            }
        }
    }

    #[test]
    fn evaluator_swap_refresh() {
        let g = named::petersen();
        let mut p: Vec<usize> = (0..10).collect();
        let mut ev = CycleEvaluator::new(10);
        ev.load(&g, &p);
        for (i, j) in [(0, 9), (3, 4), (2, 7), (5, 5)] {
            p.swap(i, j);
            ev.swap_positions(i, j);
            let mut fresh = CycleEvaluator::new(10);
            fresh.load(&g, &p);
            assert_eq!(ev.padj, fresh.padj);
        }
    }

    #[test]
    fn canonical_and_reversed() {
        let o = circ(&[3, 1, 0, 2, 4]);
        assert_eq!(o.canonical().as_slice(), &[0, 2, 4, 3, 1]);
        assert_eq!(o.reversed().as_slice(), &[0, 1, 3, 4, 2]);
        assert!(CircularOrdering::new(vec![0, 0, 1]).is_err());
    }
}

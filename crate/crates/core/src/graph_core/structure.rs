use super::{bits, Graph};
use serde::{Serialize, Serializer};
use std::collections::VecDeque;

/// Cycle length, or `Infinite` when the graph has no (odd) cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(k) => Some(k),
            Girth::Infinite => None,
        }
    }

    /// `self > k`, treating `Infinite` as larger than every integer.
    pub fn exceeds(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g > k,
            Girth::Infinite => true,
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(k) => s.serialize_u64(*k as u64),
            Girth::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut unseen = g.vertex_mask();
    let mut out = Vec::new();
    while unseen != 0 {
        let start = unseen.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= g.neighbours(v);
            }
            frontier = next & !comp;
            comp |= next;
        }
        unseen &= !comp;
        out.push(bits(comp).collect());
    }
    out
}

/// Exactly one component. `K1` is connected; the 0-vertex graph is not.
pub fn is_connected(g: &Graph) -> bool {
    components(g).len() == 1
}

/// BFS from every vertex; the shortest cycle through the root closes on a
/// non-tree edge `xy` and has length `d(x) + d(y) + 1`.
fn shortest_cycle(g: &Graph, odd_only: bool) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for y in bits(g.neighbours(x)) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    if (!odd_only || len % 2 == 1) && len < best {
                        best = len;
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

pub fn girth(g: &Graph) -> Girth {
    shortest_cycle(g, false)
}

/// Length of a shortest odd cycle. An odd closed walk of length `d(x)+d(y)+1`
/// with `d(x) = d(y)` always contains an odd cycle no longer than itself, and
/// the minimum over roots is attained by a root on a shortest odd cycle.
pub fn odd_girth(g: &Graph) -> Girth {
    shortest_cycle(g, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn cycle_girths() {
        let c7 = named::cycle(7);
        assert_eq!(girth(&c7), Girth::Finite(7));
        assert_eq!(odd_girth(&c7), Girth::Finite(7));
        let k2 = named::complete(2);
        assert_eq!(girth(&k2), Girth::Infinite);
        assert_eq!(odd_girth(&k2), Girth::Infinite);
        assert_eq!(girth(&named::cycle(6)), Girth::Finite(6));
        assert_eq!(odd_girth(&named::cycle(6)), Girth::Infinite);
        assert_eq!(girth(&named::petersen()), Girth::Finite(5));
        assert_eq!(girth(&named::complete(4)), Girth::Finite(3));
    }

    #[test]
    fn odd_girth_with_short_even_cycles() {
        // C4 sharing an edge with C5: girth 4, odd girth 5.
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (4, 5),
                (5, 6),
                (6, 1),
            ],
        )
        .unwrap();
        assert_eq!(girth(&g), Girth::Finite(4));
        assert_eq!(odd_girth(&g), Girth::Finite(5));
    }

    #[test]
    fn grotzsch_girths() {
        let g = named::grotzsch();
        assert_eq!(girth(&g), Girth::Finite(4));
        assert_eq!(odd_girth(&g), Girth::Finite(5));
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&named::cycle(5)));
        assert!(is_connected(&named::complete(1)));
        let c = named::complete_bipartite(2, 3).complement();
        assert_eq!(components(&c), vec![vec![0, 1], vec![2, 3, 4]]);
        let w = named::wheel(5).complement();
        let comps = components(&w);
        assert_eq!(comps.len(), 2);
        assert!(comps.contains(&vec![5]));
    }
}

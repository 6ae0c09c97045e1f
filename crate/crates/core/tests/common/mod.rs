//! Brute-force oracles shared by the integration tests. None of them use the
//! library's search or dynamic-programming code; they only read adjacency.

#![allow(dead_code)]

use circalt::graph_core::chromatic_number;
use circalt::mycielski::MycLabel;
use circalt::powerful::PowerfulOrdering;
use circalt::Graph;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Circular orderings with vertex 0 first and `p[1] < p[n-1]`, one per
/// rotation/reflection class.
pub fn canonical_orderings(n: usize) -> Vec<Vec<usize>> {
    if n <= 2 {
        return vec![(0..n).collect()];
    }
    permutations(n - 1)
        .into_iter()
        .map(|p| {
            std::iter::once(0)
                .chain(p.into_iter().map(|x| x + 1))
                .collect::<Vec<_>>()
        })
        .filter(|p| p[1] < p[n - 1])
        .collect()
}

/// Every simple cycle with at least three vertices, each listed once as a
/// vertex sequence starting at its smallest vertex.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for next in 0..g.n() {
            if !g.adjacent(last, next) {
                continue;
            }
            if next == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if next > start && !path.contains(&next) {
                path.push(next);
                extend(g, start, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        extend(g, s, &mut vec![s], &mut out);
    }
    out
}

/// Whether the cycle, read in one of its two directions, winds once around
/// the circular ordering.
pub fn is_monotonic(order: &[usize], cycle: &[usize]) -> bool {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let winding = |c: &mut dyn Iterator<Item = usize>| {
        let c: Vec<usize> = c.collect();
        (0..c.len())
            .map(|i| (pos[c[(i + 1) % c.len()]] + n - pos[c[i]]) % n)
            .sum::<usize>()
            == n
    };
    winding(&mut cycle.iter().copied()) || winding(&mut cycle.iter().rev().copied())
}

/// Longest monotonic cycle by enumerating every cycle; edges count as 2,
/// and an edgeless graph scores 1.
pub fn brute_longest_cycle(g: &Graph, order: &[usize], cycles: &[Vec<usize>]) -> usize {
    let mut best = if g.edge_count() > 0 { 2 } else { 1 };
    for c in cycles {
        if c.len() > best && is_monotonic(order, c) {
            best = c.len();
        }
    }
    best
}

pub fn brute_altitude(g: &Graph) -> usize {
    let cycles = simple_cycles(g);
    canonical_orderings(g.n())
        .iter()
        .map(|o| brute_longest_cycle(g, o, &cycles))
        .min()
        .unwrap()
}

/// Longest path whose vertices appear in increasing order of `order`, by
/// enumerating every such path.
pub fn brute_longest_path(g: &Graph, order: &[usize]) -> usize {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    fn walk(g: &Graph, pos: &[usize], v: usize) -> usize {
        1 + (0..g.n())
            .filter(|&u| g.adjacent(v, u) && pos[u] > pos[v])
            .map(|u| walk(g, pos, u))
            .max()
            .unwrap_or(0)
    }
    (0..n).map(|v| walk(g, &pos, v)).max().unwrap_or(0)
}

/// Every monotonic path (as a vertex list) in a linear ordering.
pub fn all_monotonic_paths(g: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    fn walk(g: &Graph, pos: &[usize], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        let v = *path.last().unwrap();
        for u in 0..g.n() {
            if g.adjacent(v, u) && pos[u] > pos[v] {
                path.push(u);
                walk(g, pos, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..n {
        walk(g, &pos, &mut vec![v], &mut out);
    }
    out
}

/// Smallest `k` admitting a proper `k`-colouring, by trying every map.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    (1..=n.max(1))
        .find(|&k| {
            let total = k.pow(n as u32);
            (0..total).any(|mut code| {
                let mut c = vec![0; n];
                for x in c.iter_mut() {
                    *x = code % k;
                    code /= k;
                }
                edges.iter().all(|&(a, b)| c[a] != c[b])
            })
        })
        .unwrap()
}

/// Whether some map into `0..p` keeps every edge's colour gap in
/// `q..=p-q`.
pub fn brute_pq(g: &Graph, p: usize, q: usize) -> bool {
    let n = g.n();
    let edges = g.edges();
    (0..p.pow(n as u32)).any(|mut code| {
        let mut c = vec![0usize; n];
        for x in c.iter_mut() {
            *x = code % p;
            code /= p;
        }
        edges.iter().all(|&(a, b)| {
            let d = c[a].abs_diff(c[b]);
            q <= d && d <= p - q
        })
    })
}

/// Least `p/q` (as a reduced pair) with `p <= n` admitting a
/// `(p, q)`-colouring.
pub fn brute_circular_chromatic(g: &Graph) -> (usize, usize) {
    let n = g.n();
    let mut best: Option<(usize, usize)> = None;
    for p in 1..=n {
        for q in 1..=p {
            if 2 * q > p && p != q {
                continue;
            }
            let better = best.is_none_or(|(bp, bq)| p * bq < bp * q);
            if better && brute_pq(g, p, q) {
                best = Some((p, q));
            }
        }
    }
    let (p, q) = best.unwrap();
    let d = gcd(p, q);
    (p / d, q / d)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Textbook Mycielskian: originals `0..n`, shadows `n..2n`, apex `2n`.
pub fn textbook_mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut m = Graph::empty(2 * n + 1).unwrap();
    for (a, b) in g.edges() {
        m.add_edge(a, b).unwrap();
        m.add_edge(a + n, b).unwrap();
        m.add_edge(a, b + n).unwrap();
    }
    for a in 0..n {
        m.add_edge(a + n, 2 * n).unwrap();
    }
    m
}

/// Sorted degree sequence.
pub fn degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Checks every monotonic path of the ordering against the structural
/// claims, returning the number of paths examined.
pub fn check_all_paths(po: &PowerfulOrdering) -> usize {
    let g = &po.graph;
    let r = po.r;
    let t = chromatic_number(&g.base).count + r;
    let paths = all_monotonic_paths(&g.graph, po.ordering.as_slice());
    for path in &paths {
        assert!(path.len() <= t, "path longer than t: {path:?}");
        if let MycLabel::W { level, .. } = g.label(path[0]) {
            assert!(path.len() + level <= r + 2, "apex path too long: {path:?}");
        }
        if path.len() >= t {
            assert!(
                path.iter().all(|&x| !g.label(x).is_w()),
                "long path meets an apex"
            );
        }
        for step in path.windows(2) {
            if let (MycLabel::Base { word: w1, .. }, MycLabel::Base { word: w2, .. }) =
                (g.label(step[0]), g.label(step[1]))
            {
                for s in 2..=r {
                    if w1.is_u(s) {
                        assert!(
                            (1..s).any(|k| !w1.is_u(k) && w2.is_u(k)),
                            "word {w1} followed by {w2}"
                        );
                    }
                }
            }
        }
    }
    paths.len()
}

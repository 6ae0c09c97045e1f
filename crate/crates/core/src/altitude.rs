//! Circular altitude: exhaustive, structural, and bracketed.
//!
//! The exhaustive search fixes vertex 0 at position 0 and keeps only
//! orderings whose position-1 vertex is smaller than their last vertex
//! (one of each mirror pair). Prefixes are scored incrementally: a monotonic
//! cycle among the placed vertices survives every completion, so a prefix
//! whose best cycle already reaches the cutoff is pruned with its subtree.

use crate::circular_colouring::circular_chromatic_number;
use crate::graph_core::{
    bits, chromatic_number, clique_number, components, max_clique, odd_girth, Colouring, Graph,
};
use crate::orderings::{longest_monotonic_cycle, CircularOrdering, LinearOrdering};
use crate::powerful::oddgirth_certificate;
use crate::search::{anneal_min_max_cycle, AnnealConfig};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

/// Largest vertex count the exhaustive search accepts.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 12;
/// Default ordering budget: covers every 12-vertex graph (11!/2).
pub const DEFAULT_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    ComplementDisconnected,
    BoundsOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Termination {
    /// Every canonical ordering was scored or pruned.
    Completed,
    /// Stopped at the first ordering meeting `max(omega, 2)`.
    LowerBoundReached,
}

/// One bound together with the evidence supporting it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEvidence {
    pub side: &'static str,
    pub value: usize,
    pub source: &'static str,
    pub witness: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AltitudeResult {
    /// Set when `lower == upper`.
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub method: Method,
    pub witness_ordering: Option<CircularOrdering>,
    pub witness_cycle: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub termination: Option<Termination>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orderings_examined: Option<u64>,
    /// Orderings scored plus those discarded with a pruned prefix; equals
    /// `(n-1)!/2` on completion.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orderings_covered: Option<u64>,
    pub evidence: Vec<BoundEvidence>,
}

impl AltitudeResult {
    pub fn is_exact(&self) -> bool {
        self.value.is_some()
    }

    fn exact(
        value: usize,
        method: Method,
        ordering: CircularOrdering,
        cycle: Vec<usize>,
    ) -> AltitudeResult {
        AltitudeResult {
            value: Some(value),
            lower: value,
            upper: value,
            method,
            witness_ordering: Some(ordering),
            witness_cycle: Some(cycle),
            termination: None,
            orderings_examined: None,
            orderings_covered: None,
            evidence: Vec::new(),
        }
    }
}

/// `(n-1)!/2` for `n >= 3`, saturating.
pub fn canonical_ordering_count(n: usize) -> u64 {
    if n < 3 {
        return 1;
    }
    let mut acc: u64 = 1;
    for k in 3..n as u64 {
        acc = acc.saturating_mul(k);
    }
    acc
}

/// `max(omega, 2)` when there is an edge, 1 otherwise.
pub fn trivial_lower_bound(g: &Graph) -> usize {
    if g.has_edge() {
        clique_number(g).max(2)
    } else {
        1
    }
}

/// Vertices sorted by colour class (then index), read clockwise.
pub fn colour_sorted_ordering(colours: &[usize]) -> CircularOrdering {
    let mut perm: Vec<usize> = (0..colours.len()).collect();
    perm.sort_by_key(|&v| (colours[v], v));
    CircularOrdering::new(perm).expect("sorted indices form a permutation")
}

struct Partition<'a> {
    g: &'a Graph,
    n: usize,
    key: usize,
    perm: Vec<usize>,
    pos: Vec<usize>,
    /// `f[j * n + q]`: vertices on a longest increasing path from the
    /// vertex at position `j` to the one at position `q` (0 = unreachable).
    f: Vec<u8>,
    cutoff: usize,
    best: Option<(usize, Vec<usize>)>,
    examined: u64,
    /// Canonical orderings scored or discarded with a pruned prefix.
    covered: u64,
    lower: usize,
    published: &'a AtomicU64,
    stopped: bool,
}

const KEY_BITS: u64 = 6;

impl Partition<'_> {
    fn should_abort(&self) -> bool {
        let p = self.published.load(AtomicOrdering::Relaxed);
        (p >> KEY_BITS) as usize == self.lower && ((p & 63) as usize) < self.key
    }

    /// Places `x` at position `k` and returns the prefix cycle value.
    fn place(&mut self, x: usize, k: usize, prefix: usize) -> usize {
        let n = self.n;
        self.perm[k] = x;
        self.pos[x] = k;
        let mut placed_nbrs = 0u64;
        for y in bits(self.g.neighbours(x)) {
            if self.pos[y] < k {
                placed_nbrs |= 1 << self.pos[y];
            }
        }
        let mut value = prefix;
        for j in 0..k {
            let row = &mut self.f[j * n..(j + 1) * n];
            let mut m = 0;
            for q in bits(placed_nbrs >> j << j) {
                m = m.max(row[q]);
            }
            row[k] = if m > 0 { m + 1 } else { 0 };
            if placed_nbrs >> j & 1 == 1 {
                value = value.max(row[k] as usize);
            }
        }
        self.f[k * n + k] = 1;
        value
    }

    /// Canonical completions once positions `0..k` are fixed and `rest`
    /// fills the remainder: the last slot needs a vertex above the key.
    fn completions(&self, rest: u64, k: usize) -> u64 {
        let m = self.n - k;
        if m == 0 {
            return 1;
        }
        let above = (rest >> (self.key + 1)).count_ones() as u64;
        above * (1..m as u64).product::<u64>()
    }

    fn unplace(&mut self, x: usize) {
        self.pos[x] = usize::MAX;
    }

    fn dfs(&mut self, k: usize, unused: u64, prefix: usize) {
        if self.stopped {
            return;
        }
        let n = self.n;
        if k == n {
            self.examined += 1;
            self.covered += 1;
            if prefix < self.cutoff {
                self.cutoff = prefix;
                self.best = Some((prefix, self.perm.clone()));
                if prefix <= self.lower {
                    self.stopped = true;
                    let code = (prefix as u64) << KEY_BITS | self.key as u64;
                    self.published.fetch_min(code, AtomicOrdering::Relaxed);
                }
            }
            return;
        }
        if self.examined & 0xfff == 0 && self.should_abort() {
            self.stopped = true;
            return;
        }
        let above = !((1u64 << (self.key + 1)) - 1);
        for x in bits(unused) {
            let rest = unused & !(1u64 << x);
            if k == n - 1 {
                if x <= self.key {
                    continue;
                }
            } else if rest & above == 0 {
                continue;
            }
            let v = self.place(x, k, prefix);
            if v < self.cutoff {
                self.dfs(k + 1, rest, v);
            } else {
                self.covered += self.completions(rest, k + 1);
            }
            self.unplace(x);
            if self.stopped {
                return;
            }
        }
    }
}

/// Minimum over canonical orderings of the longest monotonic cycle.
struct SearchOutcome {
    value: usize,
    perm: Vec<usize>,
    examined: u64,
    covered: u64,
    early: bool,
}

fn exhaustive_min(g: &Graph, lower: usize, upper: usize) -> SearchOutcome {
    let n = g.n();
    if n <= 2 {
        let perm: Vec<usize> = (0..n).collect();
        let v = longest_monotonic_cycle(g, &CircularOrdering::new(perm.clone()).unwrap()).length;
        return SearchOutcome {
            value: v,
            perm,
            examined: 1,
            covered: 1,
            early: false,
        };
    }
    let published = AtomicU64::new(u64::MAX);
    let results: Vec<(usize, Option<(usize, Vec<usize>)>, u64, u64)> = (1..n - 1)
        .into_par_iter()
        .map(|a| {
            let mut part = Partition {
                g,
                n,
                key: a,
                perm: vec![0; n],
                pos: vec![usize::MAX; n],
                f: vec![0; n * n],
                cutoff: upper + 1,
                best: None,
                examined: 0,
                covered: 0,
                lower,
                published: &published,
                stopped: false,
            };
            let v0 = part.place(0, 0, 0);
            let v1 = part.place(a, 1, v0);
            let unused = g.vertex_mask() & !1 & !(1u64 << a);
            if v1 < part.cutoff {
                part.dfs(2, unused, v1);
            } else {
                part.covered += part.completions(unused, 2);
            }
            (a, part.best, part.examined, part.covered)
        })
        .collect();
    let winner = results
        .iter()
        .filter_map(|(a, b, _, _)| b.as_ref().map(|b| (b.0, *a, b.1.clone())))
        .min_by_key(|(v, a, _)| (*v, *a))
        .expect("the colour-sorted ordering lies under the cutoff");
    let early = winner.0 <= lower;
    let counted = || results.iter().filter(|(a, ..)| !early || *a <= winner.1);
    SearchOutcome {
        // Edgeless graphs score 0 on every prefix; their value is 1.
        value: winner.0.max(1),
        perm: winner.2,
        examined: counted().map(|r| r.2).sum(),
        covered: counted().map(|r| r.3).sum(),
        early,
    }
}

fn exhaustive(g: &Graph, chi: &Colouring) -> AltitudeResult {
    let lower = trivial_lower_bound(g);
    let SearchOutcome {
        value,
        perm,
        examined,
        covered,
        early,
    } = exhaustive_min(g, lower, chi.count);
    if !early {
        assert_eq!(
            covered,
            canonical_ordering_count(g.n()),
            "search lost orderings"
        );
    }
    let ordering = CircularOrdering::new(perm).unwrap();
    let w = longest_monotonic_cycle(g, &ordering);
    assert_eq!(w.length, value, "incremental and direct scores disagree");
    let mut r = AltitudeResult::exact(value, Method::Exhaustive, ordering, w.vertices);
    r.termination = Some(if early {
        Termination::LowerBoundReached
    } else {
        Termination::Completed
    });
    r.orderings_examined = Some(examined);
    r.orderings_covered = Some(covered);
    r
}

/// Exact circular altitude by exhaustive search, or bounds when `n` exceeds
/// [`EXHAUSTIVE_MAX_VERTICES`] or `(n-1)!/2` exceeds `budget`.
pub fn circular_altitude_exact(g: &Graph, budget: u64) -> AltitudeResult {
    if g.n() > EXHAUSTIVE_MAX_VERTICES || canonical_ordering_count(g.n()) > budget {
        return circular_altitude_bounds(g, &BoundsOptions::default());
    }
    exhaustive(g, &chromatic_number(g))
}

/// Exact value `chi(G)` when the complement of `g` is disconnected.
pub fn altitude_via_complement(g: &Graph) -> Option<AltitudeResult> {
    if g.n() < 2 || components(&g.complement()).len() < 2 {
        return None;
    }
    let chi = chromatic_number(g);
    let ordering = colour_sorted_ordering(&chi.colours);
    let w = longest_monotonic_cycle(g, &ordering);
    debug_assert_eq!(w.length, chi.count);
    let mut r = AltitudeResult::exact(
        chi.count,
        Method::ComplementDisconnected,
        ordering,
        w.vertices,
    );
    r.evidence.push(BoundEvidence {
        side: "lower",
        value: chi.count,
        source: "complement-disconnected",
        witness: json!({ "complement_components": components(&g.complement()) }),
    });
    Some(r)
}

/// `alpha(G) = chi(G)`.
pub fn linear_altitude(g: &Graph) -> usize {
    chromatic_number(g).count
}

/// Hint that `g` is `M^r(base)` in canonical labelling.
#[derive(Debug, Clone)]
pub struct MycielskiHint {
    pub base: Graph,
    pub r: usize,
}

#[derive(Debug, Clone)]
pub struct BoundsOptions {
    pub budget: u64,
    pub anneal: Option<AnnealConfig>,
    pub mycielski: Option<MycielskiHint>,
    /// Largest `n` for which the exact circular chromatic number is tried.
    pub chi_c_max_vertices: usize,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions {
            budget: 0,
            anneal: None,
            mycielski: None,
            chi_c_max_vertices: 12,
        }
    }
}

/// Bracket `[lower, upper]` for the circular altitude, exact whenever one
/// of the exact routes is affordable.
pub fn circular_altitude_bounds(g: &Graph, opts: &BoundsOptions) -> AltitudeResult {
    if let Some(r) = altitude_via_complement(g) {
        return r;
    }
    let chi = chromatic_number(g);
    if g.n() <= EXHAUSTIVE_MAX_VERTICES && canonical_ordering_count(g.n()) <= opts.budget {
        return exhaustive(g, &chi);
    }
    let mut evidence = Vec::new();
    let clique = max_clique(g);
    let mut lower = clique.len();
    evidence.push(BoundEvidence {
        side: "lower",
        value: clique.len(),
        source: "clique",
        witness: json!({ "clique": clique }),
    });
    if g.has_edge() && lower < 2 {
        lower = 2;
        evidence.push(BoundEvidence {
            side: "lower",
            value: 2,
            source: "edge",
            witness: json!({ "edge": g.edges()[0] }),
        });
    }
    if let Some(h) = &opts.mycielski {
        // Every proper colouring of M^r(H) carries an alternating complete
        // bipartite subgraph on chi colours; as a monotonic cycle it has
        // 2 * floor(t / 2) vertices. Taken as a theorem, not recomputed.
        let t = chromatic_number(&h.base).count + h.r;
        if h.base.has_edge() {
            let zz = 2 * (t / 2);
            evidence.push(BoundEvidence {
                side: "lower",
                value: zz,
                source: "zigzag-theorem",
                witness: json!({ "t": t, "r": h.r }),
            });
            lower = lower.max(zz);
        }
    }

    let sorted = colour_sorted_ordering(&chi.colours);
    let w = longest_monotonic_cycle(g, &sorted);
    let mut upper = w.length;
    let mut witness_ordering = sorted.clone();
    let mut witness_cycle = w.vertices.clone();
    evidence.push(BoundEvidence {
        side: "upper",
        value: w.length,
        source: "chromatic",
        witness: json!({ "chromatic_number": chi.count, "colouring": chi.colours, "ordering": sorted, "cycle": w.vertices }),
    });
    let mut take = |value: usize, ord: CircularOrdering, cyc: Vec<usize>| {
        if value < upper {
            upper = value;
            witness_ordering = ord;
            witness_cycle = cyc;
        }
    };
    if g.n() <= opts.chi_c_max_vertices && g.has_edge() {
        let cc = circular_chromatic_number(g);
        let floor = cc.value.floor();
        let ord = colour_sorted_ordering(&cc.colouring.colour);
        let cw = longest_monotonic_cycle(g, &ord);
        evidence.push(BoundEvidence {
            side: "upper",
            value: floor,
            source: "circular-chromatic",
            witness: json!({ "p": cc.value.p, "q": cc.value.q, "colouring": cc.colouring.colour }),
        });
        take(cw.length.min(floor), ord, cw.vertices);
    }
    if let Some(h) = &opts.mycielski {
        let t = chromatic_number(&h.base).count + h.r;
        if t % 2 == 1 && h.base.has_edge() && odd_girth(&h.base).exceeds(t) {
            if let Ok(cert) = oddgirth_certificate(&h.base, h.r) {
                let ord = LinearOrdering::new(cert.ordering.clone()).unwrap().close();
                evidence.push(BoundEvidence {
                    side: "upper",
                    value: cert.value,
                    source: "powerful-ordering",
                    witness: json!({ "ordering": cert.ordering, "cycle": cert.cycle, "t": cert.t }),
                });
                take(cert.value, ord, cert.cycle.clone());
            }
        }
    }
    if let Some(cfg) = &opts.anneal {
        if g.n() >= 3 {
            if let Ok(rep) = anneal_min_max_cycle(g, cfg) {
                evidence.push(BoundEvidence {
                    side: "upper",
                    value: rep.best_value,
                    source: "anneal",
                    witness: json!({ "ordering": rep.best_ordering, "cycle": rep.witness_cycle, "seed": cfg.seed }),
                });
                take(rep.best_value, rep.best_ordering, rep.witness_cycle);
            }
        }
    }
    AltitudeResult {
        value: (lower == upper).then_some(lower),
        lower,
        upper,
        method: Method::BoundsOnly,
        witness_ordering: Some(witness_ordering),
        witness_cycle: Some(witness_cycle),
        termination: None,
        orderings_examined: None,
        orderings_covered: None,
        evidence,
    }
}

//! Consistency suite: each claim is checked over a small built-in corpus
//! and reported as pass/fail with the cases that failed.

use crate::altitude::{
    altitude_via_complement, circular_altitude_bounds, circular_altitude_exact,
    colour_sorted_ordering, BoundsOptions, MycielskiHint, DEFAULT_BUDGET,
};
use crate::circular_colouring::{
    circular_chromatic_number, is_pq_colouring, random_proper_colouring, verify_zigzag,
    zhu_hypothesis_check, zigzag_witness, Fraction,
};
use crate::error::Error;
use crate::graph_core::{chromatic_number, clique_number, Graph};
use crate::mycielski::{check_adjacency_rules, iterated_mycielskian, word_projection_scan};
use crate::named::{self, small_corpus};
use crate::orderings::{
    induced_colouring, linearize, longest_monotonic_cycle, verify_monotonic_cycle,
    CircularOrdering, LinearOrdering,
};
use crate::powerful::{build_powerful_ordering, lemma_report, oddgirth_certificate};
use crate::search::sampled_lower_evidence;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub cases: usize,
    /// Up to ten failing cases.
    pub failures: Vec<String>,
}

struct Claim {
    claim: &'static str,
    statement: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Claim {
    fn new(claim: &'static str, statement: &'static str) -> Claim {
        Claim {
            claim,
            statement,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 10 {
            self.failures.push(case());
        }
    }

    fn finish(self) -> ClaimReport {
        ClaimReport {
            claim: self.claim,
            statement: self.statement,
            passed: self.failures.is_empty(),
            cases: self.cases,
            failures: self.failures,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Seeded random graphs added to the named corpus.
    pub random_graphs: usize,
    /// Random orderings or colourings drawn per sampled claim.
    pub samples: usize,
}

impl SuiteOptions {
    pub fn new(seed: u64) -> SuiteOptions {
        SuiteOptions {
            seed,
            random_graphs: 180,
            samples: 100,
        }
    }
}

fn random_circular(n: usize, rng: &mut ChaCha8Rng) -> CircularOrdering {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    CircularOrdering::new(p).unwrap()
}

/// First-fit colours increase along every edge in the direction of the
/// ordering.
pub fn induced_colouring_order(
    corpus: &[(String, Graph)],
    samples: usize,
    seed: u64,
) -> ClaimReport {
    let mut c = Claim::new(
        "induced-colouring-order",
        "for the colouring induced by a linear ordering, adjacent u, v have c(u) < c(v) iff u precedes v",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g) in corpus {
        for _ in 0..samples.min(10) {
            let mut p: Vec<usize> = (0..g.n()).collect();
            p.shuffle(&mut rng);
            let o = LinearOrdering::new(p).unwrap();
            let pos = o.positions();
            let col = induced_colouring(g, &o).colour;
            let ok = g
                .edges()
                .iter()
                .all(|&(a, b)| (col[a] < col[b]) == (pos[a] < pos[b]));
            c.check(ok, || format!("{name}: {:?}", o.as_slice()));
        }
    }
    c.finish()
}

/// Cycles with increasing induced colours are monotonic in the circular
/// ordering the linear one came from.
pub fn increasing_cycles_are_monotonic(samples: usize, seed: u64) -> ClaimReport {
    let mut c = Claim::new(
        "increasing-cycles-are-monotonic",
        "a cycle whose induced colours increase is monotonic in the circular ordering",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g, t) in [
        ("MK3", named::by_name("MK3").unwrap(), 4),
        ("Grotzsch", named::grotzsch(), 4),
        ("M2C5", named::by_name("M2C5").unwrap(), 5),
    ] {
        for _ in 0..samples {
            let o = random_circular(g.n(), &mut rng);
            let start = o.as_slice()[rng.random_range(0..g.n())];
            let clockwise = rng.random_bool(0.5);
            let lin = linearize(&o, start, clockwise).unwrap();
            let col = induced_colouring(&g, &lin).colour;
            let ok = match zigzag_witness(&g, &col, t) {
                Ok(w) => {
                    let mut cyc = w.monotonic_cycle();
                    if !clockwise {
                        cyc.reverse();
                    }
                    verify_monotonic_cycle(&g, &o, &cyc)
                }
                Err(_) => false,
            };
            c.check(ok, || format!("{name}: {:?}", o.as_slice()));
        }
    }
    c.finish()
}

/// `alpha(G) <= floor(chi_c(G))`, with the bounding inequality replayed on
/// the colour-sorted ordering of the optimal `(p, q)`-colouring.
pub fn altitude_below_circular_chromatic(corpus: &[(String, Graph)]) -> ClaimReport {
    let mut c = Claim::new(
        "altitude-below-circular-chromatic",
        "circular altitude <= floor(circular chromatic number), and (m-1)q <= p-q for every monotonic m-cycle of the colour-sorted (p,q) ordering",
    );
    for (name, g) in corpus {
        let alt = circular_altitude_exact(g, DEFAULT_BUDGET);
        let cc = circular_chromatic_number(g);
        let Some(a) = alt.value else {
            c.check(false, || format!("{name}: altitude not exact"));
            continue;
        };
        c.check(a <= cc.value.floor(), || {
            format!("{name}: altitude {a} > floor({})", cc.value)
        });
        if g.has_edge() {
            c.check(
                replay_inequality(g, &cc.colouring.colour, cc.colouring.p, cc.colouring.q),
                || format!("{name}: inequality fails for {}", cc.value),
            );
        }
    }
    c.finish()
}

/// Replays `(m-1)q <= c(v_m) - c(v_1) <= p - q` on the longest monotonic
/// cycle of the ordering sorted by `colour`.
pub fn replay_inequality(g: &Graph, colour: &[usize], p: usize, q: usize) -> bool {
    if !is_pq_colouring(g, colour, p, q).unwrap_or(false) {
        return false;
    }
    let o = colour_sorted_ordering(colour);
    let w = longest_monotonic_cycle(g, &o);
    let pos = o.positions();
    let mut cyc = w.vertices.clone();
    let first = (0..cyc.len()).min_by_key(|&i| pos[cyc[i]]).unwrap();
    cyc.rotate_left(first);
    let cols: Vec<usize> = cyc.iter().map(|&v| colour[v]).collect();
    let m = cyc.len();
    let increasing = cols.windows(2).all(|p| p[0] < p[1]);
    let span = cols[m - 1] - cols[0];
    increasing && (m - 1) * q <= span && span <= p - q && (m - 1) * q <= p - q
}

pub fn disconnected_complement(corpus: &[(String, Graph)]) -> ClaimReport {
    let mut c = Claim::new(
        "disconnected-complement",
        "when the complement is disconnected the circular altitude equals the chromatic number",
    );
    for (name, g) in corpus {
        if let Some(r) = altitude_via_complement(g) {
            let exact = circular_altitude_exact(g, DEFAULT_BUDGET).value;
            c.check(exact == r.value, || {
                format!(
                    "{name}: exhaustive {exact:?}, complement route {:?}",
                    r.value
                )
            });
        }
    }
    c.finish()
}

pub fn odd_girth_certificates() -> ClaimReport {
    let mut c = Claim::new(
        "odd-girth-upper-bound",
        "for odd t = chi(M^r(G)) and odd girth > t, a powerful ordering has no monotonic cycle of length t",
    );
    for (name, g, r) in [
        ("C5", named::cycle(5), 0),
        ("C7", named::cycle(7), 0),
        ("C7", named::cycle(7), 2),
        ("C9", named::cycle(9), 0),
        ("C9", named::cycle(9), 2),
        ("C13", named::cycle(13), 2),
    ] {
        match oddgirth_certificate(&g, r) {
            Ok(cert) => c.check(cert.value < cert.t && cert.report.all(), || {
                format!("M^{r}({name}): value {} with t = {}", cert.value, cert.t)
            }),
            Err(e) => c.check(false, || format!("M^{r}({name}): {e}")),
        }
    }
    for (name, g, r) in [
        ("C5", named::cycle(5), 2),
        ("K3", named::complete(3), 0),
        ("C7", named::cycle(7), 1),
        ("E3", Graph::empty(3).unwrap(), 0),
    ] {
        let rejected = matches!(oddgirth_certificate(&g, r), Err(Error::Hypothesis(_)));
        c.check(rejected, || {
            format!("M^{r}({name}) should fail the hypotheses")
        });
    }
    c.finish()
}

/// `alpha(M^{2r}(C_{2n+1})) = 2r + 2`. Exact for `r = 0`; for `r = 1` the
/// upper side is the powerful-ordering certificate and the lower side is
/// sampled.
pub fn odd_cycle_mycielskians(samples: usize, seed: u64) -> ClaimReport {
    let mut c = Claim::new(
        "odd-cycle-mycielskian-altitude",
        "the circular altitude of M^{2r}(C_{2n+1}) is 2r + 2",
    );
    for n in [5, 7, 9, 11] {
        let v = circular_altitude_exact(&named::cycle(n), DEFAULT_BUDGET).value;
        c.check(v == Some(2), || format!("C{n}: {v:?}"));
    }
    for n in [5, 7] {
        let base = named::cycle(n);
        let g = iterated_mycielskian(&base, 2).unwrap().graph;
        let opts = BoundsOptions {
            mycielski: Some(MycielskiHint {
                base: base.clone(),
                r: 2,
            }),
            ..BoundsOptions::default()
        };
        let b = circular_altitude_bounds(&g, &opts);
        let ev = sampled_lower_evidence(&g, 4, samples, seed);
        if n == 7 {
            c.check(b.upper <= 4 && b.lower == 4, || {
                format!("M2C{n}: [{}, {}]", b.lower, b.upper)
            });
        }
        c.check(ev.holds, || format!("M2C{n}: sampled ordering below 4"));
    }
    c.finish()
}

pub fn circular_chromatic_odd_cycles() -> ClaimReport {
    let mut c = Claim::new(
        "odd-cycle-circular-chromatic",
        "the circular chromatic number of C_{2n+1} is 2 + 1/n",
    );
    for n in 2..=5u64 {
        let v = circular_chromatic_number(&named::cycle(2 * n as usize + 1)).value;
        c.check(v == Fraction::new(2 * n + 1, n), || {
            format!("C{}: {v}", 2 * n + 1)
        });
    }
    c.finish()
}

pub fn mycielski_structure() -> ClaimReport {
    let mut c = Claim::new(
        "mycielski-structure",
        "M^r(G) obeys the adjacency rules and word projections, has chi(G) + r colours and the same clique number",
    );
    for (name, g, max_r) in [
        ("K2", named::complete(2), 3),
        ("K3", named::complete(3), 3),
        ("C5", named::cycle(5), 2),
        ("C7", named::cycle(7), 2),
        ("K6", named::complete(6), 3),
    ] {
        let chi = chromatic_number(&g).count;
        let omega = clique_number(&g);
        for r in 0..=max_r {
            let m = iterated_mycielskian(&g, r).unwrap();
            c.check(
                check_adjacency_rules(&m) && word_projection_scan(&m),
                || format!("M^{r}({name}): adjacency"),
            );
            c.check(chromatic_number(&m.graph).count == chi + r, || {
                format!("M^{r}({name}): chromatic number")
            });
            c.check(clique_number(&m.graph) == omega.max(2.min(m.n())), || {
                format!("M^{r}({name}): clique number")
            });
        }
    }
    c.finish()
}

pub fn powerful_ordering_lemmas() -> ClaimReport {
    let mut c = Claim::new(
        "powerful-ordering-paths",
        "in a powerful ordering: words advance along edges, paths from level-i apexes have at most r+2-i vertices, paths of t or more vertices avoid apexes, and no path exceeds t",
    );
    for (name, g, r) in [
        ("K2", named::complete(2), 2),
        ("K2", named::complete(2), 3),
        ("C7", named::cycle(7), 2),
        ("C5", named::cycle(5), 3),
        ("K4", named::complete(4), 2),
    ] {
        let chi = chromatic_number(&g);
        let po = build_powerful_ordering(&g, &chi.colours, r).unwrap();
        let rep = lemma_report(&po);
        c.check(rep.all(), || format!("M^{r}({name}): {rep:?}"));
    }
    c.finish()
}

pub fn zigzag_witnesses(samples: usize, seed: u64) -> ClaimReport {
    let mut c = Claim::new(
        "alternating-bipartite",
        "every proper colouring of M^r(G) contains an alternating K_{ceil(t/2),floor(t/2)} on t increasing colours",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g, t) in [
        ("MK3", named::by_name("MK3").unwrap(), 4),
        ("Grotzsch", named::grotzsch(), 4),
        ("M2C5", named::by_name("M2C5").unwrap(), 5),
    ] {
        for _ in 0..samples {
            let col = random_proper_colouring(&g, &mut rng);
            let ok = zigzag_witness(&g, &col, t).is_ok_and(|w| verify_zigzag(&g, &col, &w, t));
            c.check(ok, || format!("{name}: {col:?}"));
        }
    }
    c.finish()
}

pub fn separating_set() -> ClaimReport {
    let mut c = Claim::new(
        "separating-colour-classes",
        "M(K3) has no proper vertex subset that is a union of classes in every 4-colouring; K4 has one",
    );
    let mk3 = zhu_hypothesis_check(&named::by_name("MK3").unwrap(), 4, 1_000_000);
    c.check(mk3.is_ok_and(|r| !r.holds), || "MK3".into());
    let k4 = zhu_hypothesis_check(&named::complete(4), 4, 1_000_000);
    c.check(k4.is_ok_and(|r| r.holds), || "K4".into());
    c.finish()
}

/// Runs every claim.
pub fn run_suite(opts: &SuiteOptions) -> Vec<ClaimReport> {
    let corpus = small_corpus(opts.random_graphs, opts.seed);
    vec![
        induced_colouring_order(&corpus, opts.samples, opts.seed),
        increasing_cycles_are_monotonic(opts.samples, opts.seed),
        altitude_below_circular_chromatic(&corpus),
        disconnected_complement(&corpus),
        circular_chromatic_odd_cycles(),
        mycielski_structure(),
        powerful_ordering_lemmas(),
        odd_girth_certificates(),
        odd_cycle_mycielskians(opts.samples * 10, opts.seed),
        zigzag_witnesses(opts.samples, opts.seed),
        separating_set(),
    ]
}

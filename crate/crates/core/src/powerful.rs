//! Powerful orderings of iterated Mycielskians and the odd-girth upper
//! bound certificate built from them.

use crate::error::{Error, Result};
use crate::graph_core::{chromatic_number, is_proper_colouring, odd_girth, Girth, Graph};
use crate::mycielski::{iterated_mycielskian, LabelledGraph, MycLabel};
use crate::orderings::{
    induced_colouring, longest_monotonic_cycle, longest_monotonic_path, LinearOrdering,
};
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct PowerfulOrdering {
    pub graph: LabelledGraph,
    pub ordering: LinearOrdering,
    /// Colouring of the base graph the ordering induces.
    pub base_colouring: Vec<usize>,
    pub r: usize,
}

impl PowerfulOrdering {
    pub fn labels(&self) -> Vec<String> {
        self.ordering
            .as_slice()
            .iter()
            .map(|&v| self.graph.render(v))
            .collect()
    }
}

/// Repeatedly replaces `c` by the colouring induced by sorting on
/// `(c, index)` until nothing changes. Each round is pointwise no larger, so
/// this terminates, and the fixed point is induced by its own sorted order.
fn settle(g: &Graph, c: &[usize]) -> Vec<usize> {
    let mut c = c.to_vec();
    loop {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (c[v], v));
        let next = induced_colouring(g, &LinearOrdering::new(order).unwrap()).colour;
        if next == c {
            return c;
        }
        c = next;
    }
}

/// Apexes by level then word, followed by base vertices grouped by word in
/// lexicographic order and sorted by colour inside each word.
pub fn build_powerful_ordering(g: &Graph, c: &[usize], r: usize) -> Result<PowerfulOrdering> {
    if c.len() != g.n() || !is_proper_colouring(g, c) {
        return Err(Error::InvalidColouring("not a proper colouring".into()));
    }
    let mut used = c.to_vec();
    used.sort_unstable();
    used.dedup();
    let chi = chromatic_number(g).count;
    if used.len() != chi {
        return Err(Error::InvalidColouring(format!(
            "uses {} colours but the chromatic number is {chi}",
            used.len()
        )));
    }
    let c = settle(g, c);
    let graph = iterated_mycielskian(g, r)?;
    let mut order: Vec<usize> = (0..graph.n()).collect();
    order.sort_by_key(|&x| match graph.label(x) {
        MycLabel::W { level, word } => (0, level, word, 0, 0),
        MycLabel::Base { vertex, word } => (1, 0, word, c[vertex], vertex),
    });
    Ok(PowerfulOrdering {
        ordering: LinearOrdering::new(order)?,
        graph,
        base_colouring: c,
        r,
    })
}

/// Restriction of an ordering of `g` to its inherited copy of `M^{r-1}`,
/// expressed in that copy's indices. `None` when `g.r == 0`.
pub fn inherited_ordering(
    g: &LabelledGraph,
    o: &LinearOrdering,
) -> Option<(LabelledGraph, LinearOrdering)> {
    let (sub, verts) = g.inherited()?;
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        local[v] = i;
    }
    let perm = o
        .as_slice()
        .iter()
        .filter(|&&v| local[v] != usize::MAX)
        .map(|&v| local[v])
        .collect();
    Some((
        sub,
        LinearOrdering::new(perm).expect("restriction is a permutation"),
    ))
}

/// The base-graph ordering reached by inheriting `g.r` times.
pub fn base_ordering(g: &LabelledGraph, o: &LinearOrdering) -> LinearOrdering {
    let (mut g, mut o) = (g.clone(), o.clone());
    while let Some((sub, so)) = inherited_ordering(&g, &o) {
        g = sub;
        o = so;
    }
    let perm = o
        .as_slice()
        .iter()
        .map(|&x| match g.label(x) {
            MycLabel::Base { vertex, .. } => vertex,
            MycLabel::W { .. } => unreachable!("level 0 has no apexes"),
        })
        .collect();
    LinearOrdering::new(perm).unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerfulReport {
    pub p0: bool,
    pub p1: bool,
    pub p2: bool,
    pub p3: bool,
    pub p4: bool,
    pub induced_colouring: Vec<usize>,
}

impl PowerfulReport {
    pub fn all(&self) -> bool {
        self.p0 && self.p1 && self.p2 && self.p3 && self.p4
    }
}

pub fn verify_powerful(g: &LabelledGraph, o: &LinearOrdering) -> PowerfulReport {
    let c = induced_colouring(&g.base, &base_ordering(g, o)).colour;
    let chi = chromatic_number(&g.base).count;
    let p0 = c.iter().copied().max().unwrap_or(0) == chi;
    let seq: Vec<MycLabel> = o.as_slice().iter().map(|&x| g.label(x)).collect();
    let bases: Vec<(usize, crate::mycielski::Word)> = seq
        .iter()
        .filter_map(|l| match *l {
            MycLabel::Base { vertex, word } => Some((vertex, word)),
            MycLabel::W { .. } => None,
        })
        .collect();
    let p2 = bases.windows(2).all(|p| p[0].1 <= p[1].1);
    let p1 = bases
        .windows(2)
        .all(|p| p[0].1 != p[1].1 || c[p[0].0] <= c[p[1].0])
        && (p2 || {
            // Without P2 a word's vertices may be scattered; compare all pairs.
            bases.iter().enumerate().all(|(i, a)| {
                bases[i + 1..]
                    .iter()
                    .all(|b| a.1 != b.1 || c[a.0] <= c[b.0])
            })
        });
    let first_base = seq.iter().position(|l| !l.is_w()).unwrap_or(seq.len());
    let p3 = seq[first_base..].iter().all(|l| !l.is_w());
    let levels: Vec<usize> = seq
        .iter()
        .filter_map(|l| match *l {
            MycLabel::W { level, .. } => Some(level),
            MycLabel::Base { .. } => None,
        })
        .collect();
    let p4 = levels.windows(2).all(|p| p[0] <= p[1]);
    PowerfulReport {
        p0,
        p1,
        p2,
        p3,
        p4,
        induced_colouring: c,
    }
}

/// Upper-bound certificate: a powerful ordering closed into a circular
/// ordering whose longest monotonic cycle is shorter than `t`.
#[derive(Debug, Clone, Serialize)]
pub struct OddGirthCertificate {
    pub r: usize,
    pub t: usize,
    pub odd_girth: Girth,
    pub ordering: Vec<usize>,
    pub labels: Vec<String>,
    pub value: usize,
    pub cycle: Vec<usize>,
    pub report: PowerfulReport,
}

pub fn oddgirth_certificate(g: &Graph, r: usize) -> Result<OddGirthCertificate> {
    if !g.has_edge() {
        return Err(Error::Hypothesis("graph has no edge".into()));
    }
    let chi = chromatic_number(g);
    let t = chi.count + r;
    if t.is_multiple_of(2) {
        return Err(Error::Hypothesis(format!("t = {t} is even")));
    }
    let og = odd_girth(g);
    if !og.exceeds(t) {
        return Err(Error::Hypothesis(format!(
            "odd girth {} does not exceed t = {t}",
            og.finite().map_or("infinity".into(), |k| k.to_string())
        )));
    }
    let po = build_powerful_ordering(g, &chi.colours, r)?;
    let report = verify_powerful(&po.graph, &po.ordering);
    if !report.all() {
        return Err(Error::TheoremViolation(format!(
            "constructed ordering is not powerful: {report:?}"
        )));
    }
    let w = longest_monotonic_cycle(&po.graph.graph, &po.ordering.close());
    if w.length >= t {
        return Err(Error::TheoremViolation(format!(
            "monotonic cycle of length {} with t = {t}",
            w.length
        )));
    }
    Ok(OddGirthCertificate {
        r,
        t,
        odd_girth: og,
        labels: po.labels(),
        ordering: po.ordering.into_vec(),
        value: w.length,
        cycle: w.vertices,
        report,
    })
}

/// Structural lemma checks on a powerful ordering, each computed by
/// dynamic programming over the ordering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    /// Word-advance rule on every ordered edge between base vertices.
    pub word_advance: bool,
    /// Paths from a level-i apex have at most r + 2 - i vertices.
    pub apex_paths: bool,
    /// No path with t or more vertices meets an apex.
    pub long_paths_avoid_apexes: bool,
    /// Longest monotonic path, compared with t.
    pub longest_path: usize,
    pub t: usize,
}

impl LemmaReport {
    pub fn all(&self) -> bool {
        self.word_advance
            && self.apex_paths
            && self.long_paths_avoid_apexes
            && self.longest_path <= self.t
    }
}

/// Whether the step `from -> to` (both base-vertex words, `to` later in the
/// ordering) obeys the word-advance rule.
pub fn word_advance_ok(from: crate::mycielski::Word, to: crate::mycielski::Word) -> bool {
    let len = from.len();
    (2..=len)
        .filter(|&s| from.is_u(s))
        .all(|s| (1..s).any(|k| !from.is_u(k) && to.is_u(k)))
}

pub fn lemma_report(po: &PowerfulOrdering) -> LemmaReport {
    let g = &po.graph;
    let n = g.n();
    let order = po.ordering.as_slice();
    let pos = po.ordering.positions();
    let mut ending = vec![1usize; n];
    for &v in order {
        for u in crate::graph_core::bits(g.graph.neighbours(v)) {
            if pos[u] < pos[v] {
                ending[v] = ending[v].max(ending[u] + 1);
            }
        }
    }
    let mut starting = vec![1usize; n];
    for &v in order.iter().rev() {
        for u in crate::graph_core::bits(g.graph.neighbours(v)) {
            if pos[u] > pos[v] {
                starting[v] = starting[v].max(starting[u] + 1);
            }
        }
    }
    let t = chromatic_number(&g.base).count + po.r;
    let mut word_advance = true;
    for (a, b) in g.graph.edges() {
        let (x, y) = if pos[a] < pos[b] { (a, b) } else { (b, a) };
        if let (MycLabel::Base { word: wx, .. }, MycLabel::Base { word: wy, .. }) =
            (g.label(x), g.label(y))
        {
            word_advance &= word_advance_ok(wx, wy);
        }
    }
    let apexes: Vec<(usize, usize)> = (0..n)
        .filter_map(|x| match g.label(x) {
            MycLabel::W { level, .. } => Some((x, level)),
            MycLabel::Base { .. } => None,
        })
        .collect();
    LemmaReport {
        word_advance,
        apex_paths: apexes.iter().all(|&(x, i)| starting[x] + i <= po.r + 2),
        long_paths_avoid_apexes: apexes.iter().all(|&(x, _)| ending[x] + starting[x] - 1 < t),
        longest_path: longest_monotonic_path(&g.graph, &po.ordering).length,
        t,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn mk2_example() {
        let k2 = named::complete(2)
            .with_labels(vec!["a".into(), "b".into()])
            .unwrap();
        let po = build_powerful_ordering(&k2, &[1, 2], 1).unwrap();
        assert_eq!(po.labels(), ["w_1", "a^{v}", "b^{v}", "a^{u}", "b^{u}"]);
        let (sub, o) = inherited_ordering(&po.graph, &po.ordering).unwrap();
        let names: Vec<String> = o.as_slice().iter().map(|&v| sub.render(v)).collect();
        assert_eq!(names, ["a", "b"]);
    }

    #[test]
    fn r0_sorts_by_colour() {
        let g = named::cycle(5);
        let po = build_powerful_ordering(&g, &[1, 2, 1, 2, 3], 0).unwrap();
        assert_eq!(po.ordering.as_slice(), &[0, 2, 1, 3, 4]);
        assert!(verify_powerful(&po.graph, &po.ordering).all());
    }

    #[test]
    fn colouring_is_normalised_to_its_induced_form() {
        // Vertex 4 of the path is coloured 3 but sees nothing coloured 2.
        let g = named::path(5);
        assert!(build_powerful_ordering(&g, &[1, 2, 1, 2, 1], 0).is_ok());
        let g = named::cycle(5);
        let po = build_powerful_ordering(&g, &[3, 1, 3, 2, 1], 2).unwrap();
        let rep = verify_powerful(&po.graph, &po.ordering);
        assert!(rep.all());
        assert_eq!(rep.induced_colouring, po.base_colouring);
    }

    #[test]
    fn rejects_bad_colourings() {
        let g = named::cycle(5);
        assert!(build_powerful_ordering(&g, &[1, 1, 2, 1, 2], 1).is_err());
        assert!(build_powerful_ordering(&g, &[1, 2, 3, 4, 2], 1).is_err());
    }

    #[test]
    fn mutations_break_the_expected_property() {
        let g = named::cycle(7);
        let chi = chromatic_number(&g);
        let po = build_powerful_ordering(&g, &chi.colours, 2).unwrap();
        assert_eq!(po.ordering.len(), 31);
        assert!(verify_powerful(&po.graph, &po.ordering).all());
        let mut p = po.ordering.clone().into_vec();
        let last = p.len() - 1;
        p.swap(3, last);
        let rep = verify_powerful(&po.graph, &LinearOrdering::new(p).unwrap());
        assert!(!rep.p2);
        let mut p = po.ordering.clone().into_vec();
        let apex = p.remove(2);
        p.insert(5, apex);
        let rep = verify_powerful(&po.graph, &LinearOrdering::new(p).unwrap());
        assert!(!rep.p3);
    }

    #[test]
    fn certificates() {
        let c = oddgirth_certificate(&named::cycle(5), 0).unwrap();
        assert_eq!((c.t, c.value), (3, 2));
        let c = oddgirth_certificate(&named::cycle(7), 2).unwrap();
        assert_eq!(c.t, 5);
        assert!(c.value <= 4);
        assert!(matches!(
            oddgirth_certificate(&named::complete(3), 0),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            oddgirth_certificate(&named::cycle(7), 1),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            oddgirth_certificate(&named::cycle(5), 2),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn lemmas_hold_on_small_cases() {
        for (g, r) in [
            (named::complete(2), 2),
            (named::cycle(7), 2),
            (named::cycle(5), 3),
        ] {
            let chi = chromatic_number(&g);
            let po = build_powerful_ordering(&g, &chi.colours, r).unwrap();
            let rep = lemma_report(&po);
            assert!(rep.all(), "{rep:?}");
        }
    }
}

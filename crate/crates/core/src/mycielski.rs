//! Mycielskians `M(G)` and `M^r(G)` with word-labelled vertices.
//!
//! A vertex of `M^r(G)` is either a base vertex `a^W` (`a` in `G`, `W` a
//! word of length `r` over `{u, v}`) or an apex `w_i^W` with `|W| = r - i`.
//! Words are read right to left: position 1 is the rightmost letter and was
//! appended by the most recent Mycielski step.

use crate::error::{Error, Result};
use crate::graph_core::{bits, Graph, MAX_VERTICES};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// Word over `{u, v}`; bit `s - 1` holds position `s`, set for `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: u32,
    len: u8,
}

impl Word {
    pub const EMPTY: Word = Word { bits: 0, len: 0 };

    pub fn from_bits(bits: u32, len: usize) -> Word {
        debug_assert!(len < 32 && bits >> len == 0);
        Word {
            bits,
            len: len as u8,
        }
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn raw(self) -> u32 {
        self.bits
    }

    /// Letter at 1-based position `s` counted from the right: true for `u`.
    pub fn is_u(self, s: usize) -> bool {
        debug_assert!(s >= 1 && s <= self.len());
        self.bits >> (s - 1) & 1 == 1
    }

    /// Appends `letter` as the new rightmost letter.
    pub fn push(self, u: bool) -> Word {
        Word {
            bits: self.bits << 1 | u as u32,
            len: self.len + 1,
        }
    }

    /// Removes the rightmost letter.
    pub fn pop(self) -> Option<(Word, bool)> {
        if self.len == 0 {
            None
        } else {
            Some((
                Word {
                    bits: self.bits >> 1,
                    len: self.len - 1,
                },
                self.bits & 1 == 1,
            ))
        }
    }

    /// All words of length `len` in increasing lexicographic order.
    pub fn all(len: usize) -> Vec<Word> {
        let mut out: Vec<Word> = (0..1u32 << len).map(|b| Word::from_bits(b, len)).collect();
        out.sort();
        out
    }

    pub fn parse(s: &str) -> Option<Word> {
        if s.len() >= 32 {
            return None;
        }
        let mut w = Word::EMPTY;
        for ch in s.chars() {
            w = w.push(match ch {
                'u' => true,
                'v' => false,
                _ => return None,
            });
        }
        Some(w)
    }
}

impl Ord for Word {
    /// Shorter words first; equal lengths compare from the rightmost letter
    /// leftwards with `v < u`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            let diff = self.bits ^ other.bits;
            if diff == 0 {
                Ordering::Equal
            } else if self.bits >> diff.trailing_zeros() & 1 == 1 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in (1..=self.len()).rev() {
            f.write_str(if self.is_u(s) { "u" } else { "v" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MycLabel {
    Base { vertex: usize, word: Word },
    W { level: usize, word: Word },
}

impl MycLabel {
    pub fn word(self) -> Word {
        match self {
            MycLabel::Base { word, .. } | MycLabel::W { word, .. } => word,
        }
    }

    pub fn is_w(self) -> bool {
        matches!(self, MycLabel::W { .. })
    }

    fn with_word(self, word: Word) -> MycLabel {
        match self {
            MycLabel::Base { vertex, .. } => MycLabel::Base { vertex, word },
            MycLabel::W { level, .. } => MycLabel::W { level, word },
        }
    }

    /// Label of the same vertex one level down, when its rightmost letter
    /// is `v`.
    pub fn inherit(self) -> Option<MycLabel> {
        match self.word().pop() {
            Some((rest, false)) => Some(self.with_word(rest)),
            _ => None,
        }
    }

    fn sort_key(self) -> (u8, usize, Word, usize) {
        match self {
            MycLabel::W { level, word } => (0, level, word, 0),
            MycLabel::Base { vertex, word } => (1, 0, word, vertex),
        }
    }

    /// Display form such as `b^{uv}` or `w_1^{v}`; `base` supplies the
    /// names of base vertices.
    pub fn render(self, base: &Graph) -> String {
        let (head, word) = match self {
            MycLabel::Base { vertex, word } => (base.label(vertex), word),
            MycLabel::W { level, word } => (format!("w_{level}"), word),
        };
        if word.is_empty() {
            head
        } else {
            format!("{head}^{{{word}}}")
        }
    }

    pub fn parse(s: &str, base: &Graph) -> Result<MycLabel> {
        let bad = || Error::InvalidLabel(s.to_string());
        let (head, word) = match s.split_once('^') {
            Some((h, w)) => {
                let w = w
                    .strip_prefix('{')
                    .and_then(|w| w.strip_suffix('}'))
                    .ok_or_else(bad)?;
                (h, Word::parse(w).ok_or_else(bad)?)
            }
            None => (s, Word::EMPTY),
        };
        if let Some(level) = head.strip_prefix("w_") {
            if let Ok(level) = level.parse() {
                return Ok(MycLabel::W { level, word });
            }
        }
        let vertex = (0..base.n())
            .find(|&v| base.label(v) == head)
            .ok_or_else(bad)?;
        Ok(MycLabel::Base { vertex, word })
    }
}

impl Ord for MycLabel {
    /// Apexes by level then word, then base vertices by word then index.
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for MycLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `M^r(base)` with its vertex labels. Indices follow the `MycLabel` order.
#[derive(Debug, Clone)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub base: Graph,
    pub r: usize,
    labels: Vec<MycLabel>,
    index: HashMap<MycLabel, usize>,
}

pub fn vertex_count(n: usize, r: usize) -> usize {
    (n << r) + (1 << r) - 1
}

impl LabelledGraph {
    /// `M^0(base)`.
    pub fn base(base: &Graph) -> LabelledGraph {
        let labels: Vec<MycLabel> = (0..base.n())
            .map(|vertex| MycLabel::Base {
                vertex,
                word: Word::EMPTY,
            })
            .collect();
        LabelledGraph::assemble(base.clone(), base.clone(), 0, labels)
    }

    fn assemble(graph: Graph, base: Graph, r: usize, labels: Vec<MycLabel>) -> LabelledGraph {
        let index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        LabelledGraph {
            graph,
            base,
            r,
            labels,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn label(&self, v: usize) -> MycLabel {
        self.labels[v]
    }

    pub fn labels(&self) -> &[MycLabel] {
        &self.labels
    }

    pub fn index_of(&self, l: MycLabel) -> Option<usize> {
        self.index.get(&l).copied()
    }

    pub fn render(&self, v: usize) -> String {
        self.labels[v].render(&self.base)
    }

    /// Index-to-label map for the JSON sidecar.
    pub fn label_strings(&self) -> Vec<String> {
        (0..self.n()).map(|v| self.render(v)).collect()
    }

    /// Vertices with all apexes removed, i.e. those of the form `a^W`.
    pub fn base_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| !self.labels[v].is_w())
    }

    /// The copy of `M^{r-1}(G)` on vertices whose rightmost letter is `v`,
    /// labelled one level down. Returns `None` for `r = 0`.
    pub fn inherited(&self) -> Option<(LabelledGraph, Vec<usize>)> {
        if self.r == 0 {
            return None;
        }
        let mut keep: Vec<(MycLabel, usize)> = (0..self.n())
            .filter_map(|v| self.labels[v].inherit().map(|l| (l, v)))
            .collect();
        keep.sort();
        let verts: Vec<usize> = keep.iter().map(|&(_, v)| v).collect();
        let graph = self.graph.induced(&verts);
        let labels = keep.into_iter().map(|(l, _)| l).collect();
        Some((
            LabelledGraph::assemble(graph, self.base.clone(), self.r - 1, labels),
            verts,
        ))
    }
}

pub fn mycielskian(g: &LabelledGraph) -> Result<LabelledGraph> {
    let n = g.n();
    let total = 2 * n + 1;
    if total > MAX_VERTICES {
        return Err(Error::TooManyVertices(total));
    }
    let mut labels = Vec::with_capacity(total);
    labels.push(MycLabel::W {
        level: g.r + 1,
        word: Word::EMPTY,
    });
    for &l in &g.labels {
        labels.push(l.with_word(l.word().push(false)));
        labels.push(l.with_word(l.word().push(true)));
    }
    labels.sort();
    let pos: HashMap<MycLabel, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let copy = |x: usize, u: bool| {
        let l = g.labels[x];
        pos[&l.with_word(l.word().push(u))]
    };
    let apex = pos[&MycLabel::W {
        level: g.r + 1,
        word: Word::EMPTY,
    }];
    let mut graph = Graph::empty(total)?;
    for (a, b) in g.graph.edges() {
        graph.add_edge(copy(a, false), copy(b, false))?;
        graph.add_edge(copy(a, true), copy(b, false))?;
        graph.add_edge(copy(a, false), copy(b, true))?;
    }
    for x in 0..n {
        graph.add_edge(apex, copy(x, true))?;
    }
    Ok(LabelledGraph::assemble(
        graph,
        g.base.clone(),
        g.r + 1,
        labels,
    ))
}

pub fn iterated_mycielskian(base: &Graph, r: usize) -> Result<LabelledGraph> {
    let mut g = LabelledGraph::base(base);
    for _ in 0..r {
        g = mycielskian(&g)?;
    }
    Ok(g)
}

/// Checks R1-R3 on the top level, then recursively on the inherited copy,
/// and finally that level 0 is the base graph itself.
pub fn check_adjacency_rules(g: &LabelledGraph) -> bool {
    if g.r == 0 {
        return g.n() == g.base.n()
            && (0..g.n()).all(|x| match g.labels[x] {
                MycLabel::Base { vertex, word } => {
                    word.is_empty()
                        && (0..g.n()).all(|y| match g.labels[y] {
                            MycLabel::Base { vertex: b, .. } => {
                                g.graph.adjacent(x, y) == g.base.adjacent(vertex, b)
                            }
                            MycLabel::W { .. } => false,
                        })
                }
                MycLabel::W { .. } => false,
            });
    }
    if g.n() != vertex_count(g.base.n(), g.r) {
        return false;
    }
    let Some((lower, _)) = g.inherited() else {
        return false;
    };
    // Vertex a of the lower graph and its two copies in g.
    let copies: Vec<(usize, usize)> = lower
        .labels
        .iter()
        .map(|&l| {
            let vc = g.index_of(l.with_word(l.word().push(false)));
            let uc = g.index_of(l.with_word(l.word().push(true)));
            (vc.unwrap_or(usize::MAX), uc.unwrap_or(usize::MAX))
        })
        .collect();
    if copies
        .iter()
        .any(|&(a, b)| a == usize::MAX || b == usize::MAX)
    {
        return false;
    }
    let Some(apex) = g.index_of(MycLabel::W {
        level: g.r,
        word: Word::EMPTY,
    }) else {
        return false;
    };
    let gr = &g.graph;
    // R1, and the apex has no other neighbours.
    let u_mask: u64 = copies.iter().fold(0, |m, &(_, u)| m | 1 << u);
    if gr.neighbours(apex) != u_mask {
        return false;
    }
    for (a, &(av, au)) in copies.iter().enumerate() {
        for (b, &(bv, bu)) in copies.iter().enumerate() {
            let ab = lower.graph.adjacent(a, b);
            // R2
            if gr.adjacent(au, bu) {
                return false;
            }
            // R3
            if gr.adjacent(av, bv) != ab || gr.adjacent(av, bu) != ab {
                return false;
            }
        }
    }
    check_adjacency_rules(&lower)
}

/// Exhaustive pair scan of the three clauses of the word-projection lemma:
/// (i) base vertices with distinct words are adjacent only over an edge of
/// `G`; (ii) base vertices whose words share a `u` position are never
/// adjacent; (iii) apexes of one level with distinct words are never
/// adjacent.
pub fn word_projection_scan(g: &LabelledGraph) -> bool {
    let n = g.n();
    for x in 0..n {
        for y in bits(g.graph.neighbours(x)) {
            match (g.labels[x], g.labels[y]) {
                (
                    MycLabel::Base {
                        vertex: i,
                        word: w1,
                    },
                    MycLabel::Base {
                        vertex: j,
                        word: w2,
                    },
                ) => {
                    if w1 != w2 && !g.base.adjacent(i, j) {
                        return false;
                    }
                    if w1.raw() & w2.raw() != 0 {
                        return false;
                    }
                }
                (
                    MycLabel::W {
                        level: l1,
                        word: w1,
                    },
                    MycLabel::W {
                        level: l2,
                        word: w2,
                    },
                ) if l1 == l2 && w1 != w2 => {
                    return false;
                }
                _ => {}
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{chromatic_number, clique_number};
    use crate::named;

    #[test]
    fn word_order_matches_right_to_left_lex() {
        let w = |s| Word::parse(s).unwrap();
        assert!(w("uvv") < w("vuv"));
        assert!(w("vuv") < w("uvu"));
        assert_eq!(w("uv").to_string(), "uv");
        assert!(w("uv").is_u(2) && !w("uv").is_u(1));
        let all = Word::all(2);
        let shown: Vec<String> = all.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["vv", "uv", "vu", "uu"]);
    }

    #[test]
    fn mk2_is_c5() {
        let m = iterated_mycielskian(&named::complete(2), 1).unwrap();
        assert_eq!(m.n(), 5);
        let names = m.label_strings();
        assert_eq!(names, ["w_1", "0^{v}", "1^{v}", "0^{u}", "1^{u}"]);
        // w, a^u, b^v, a^v, b^u walks the 5-cycle.
        let cycle = [0, 3, 2, 1, 4];
        let c5 = named::cycle(5);
        let mut perm = vec![0; 5];
        for (i, &v) in cycle.iter().enumerate() {
            perm[v] = i;
        }
        assert!(m.graph.is_isomorphism(&c5, &perm));
    }

    #[test]
    fn m2k2_is_m_c5() {
        let m2 = iterated_mycielskian(&named::complete(2), 2).unwrap();
        let mc5 = iterated_mycielskian(&named::cycle(5), 1).unwrap();
        assert_eq!(m2.n(), 11);
        // Lift the explicit C5 isomorphism of M(K2) through one more step.
        let m1 = iterated_mycielskian(&named::complete(2), 1).unwrap();
        let c5_pos = [0usize, 3, 2, 1, 4];
        let mut phi = [0; 5];
        for (i, &v) in c5_pos.iter().enumerate() {
            phi[v] = i;
        }
        let mut perm = vec![0; 11];
        for x in 0..11 {
            let target = match m2.label(x) {
                MycLabel::W { level: 2, .. } => MycLabel::W {
                    level: 1,
                    word: Word::EMPTY,
                },
                l => {
                    let (rest, u) = l.word().pop().unwrap();
                    let inner = m1.index_of(l.with_word(rest)).unwrap();
                    MycLabel::Base {
                        vertex: phi[inner],
                        word: Word::EMPTY.push(u),
                    }
                }
            };
            perm[x] = mc5.index_of(target).unwrap();
        }
        assert!(m2.graph.is_isomorphism(&mc5.graph, &perm));
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(
            iterated_mycielskian(&named::complete(6), 3).unwrap().n(),
            55
        );
        assert_eq!(iterated_mycielskian(&named::cycle(7), 2).unwrap().n(), 31);
        assert_eq!(vertex_count(6, 3), 55);
        let id = iterated_mycielskian(&named::petersen(), 0).unwrap();
        assert_eq!(id.graph, named::petersen());
    }

    #[test]
    fn adjacency_rules_hold_and_detect_corruption() {
        for (g, r) in [
            (named::complete(2), 1),
            (named::cycle(7), 2),
            (named::complete(3), 2),
            (named::petersen(), 1),
        ] {
            let m = iterated_mycielskian(&g, r).unwrap();
            assert!(check_adjacency_rules(&m));
            assert!(word_projection_scan(&m));
        }
        let mut m = iterated_mycielskian(&named::cycle(7), 2).unwrap();
        let us: Vec<usize> = (0..m.n())
            .filter(|&x| !m.label(x).is_w() && m.label(x).word().is_u(1))
            .collect();
        m.graph.add_edge(us[0], us[1]).unwrap();
        assert!(!check_adjacency_rules(&m));
    }

    #[test]
    fn v_copy_induces_base() {
        let g = named::petersen();
        let m = iterated_mycielskian(&g, 1).unwrap();
        let (lower, _) = m.inherited().unwrap();
        assert_eq!(lower.graph, g);
    }

    #[test]
    fn labels_round_trip() {
        let m = iterated_mycielskian(&named::cycle(5), 2).unwrap();
        for x in 0..m.n() {
            let s = m.render(x);
            assert_eq!(MycLabel::parse(&s, &m.base).unwrap(), m.label(x), "{s}");
        }
        assert!(MycLabel::parse("9^{uv}", &m.base).is_err());
        assert!(MycLabel::parse("0^{ux}", &m.base).is_err());
    }

    #[test]
    fn chromatic_and_clique_step() {
        for (g, rmax) in [
            (named::complete(2), 3),
            (named::complete(3), 2),
            (named::cycle(5), 2),
            (named::cycle(7), 1),
        ] {
            let chi = chromatic_number(&g).count;
            let omega = clique_number(&g);
            for r in 0..=rmax {
                let m = iterated_mycielskian(&g, r).unwrap();
                assert_eq!(chromatic_number(&m.graph).count, chi + r);
                assert_eq!(clique_number(&m.graph), omega);
            }
        }
    }
}

//! Simple undirected graphs on at most 64 vertices, stored as one `u64`
//! adjacency row per vertex, plus the classical invariants the rest of the
//! crate consumes.

mod chromatic;
mod clique;
mod graph6;
mod structure;

pub use chromatic::{chromatic_number, dsatur_colouring, is_proper_colouring, Colouring};
pub use clique::{clique_number, max_clique};
pub use graph6::{emit_graph6, parse_graph6, MAX_GRAPH6_VERTICES};
pub use structure::{components, girth, is_connected, odd_girth, Girth};

use crate::error::{Error, Result};

/// Hard limit imposed by the `u64` adjacency rows.
pub const MAX_VERTICES: usize = 64;

/// Iterate the indices of the set bits of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            labels: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Adds the edge `ab`. Loops are rejected; repeated edges are no-ops.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.n {
            return Err(Error::VertexOutOfRange(a));
        }
        if b >= self.n {
            return Err(Error::VertexOutOfRange(b));
        }
        if a == b {
            return Err(Error::VertexOutOfRange(a));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        if a < self.n && b < self.n {
            self.adj[a] &= !(1 << b);
            self.adj[b] &= !(1 << a);
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidLabel(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Neighbourhood of `v` as a bitset.
    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self) -> bool {
        self.adj.iter().any(|&r| r != 0)
    }

    /// All edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.n {
            for b in bits(self.adj[a] >> a >> 1) {
                out.push((a, a + 1 + b));
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of vertex `v`: its label, or its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1u64 << v))
            .collect();
        Graph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![0u64; k];
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if self.adjacent(a, b) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph {
            n: k,
            adj,
            labels: self
                .labels
                .as_ref()
                .map(|l| vertices.iter().map(|&v| l[v].clone()).collect()),
        }
    }

    /// Checks symmetry, irreflexivity and the vertex range of every row.
    pub fn is_well_formed(&self) -> bool {
        let all = self.vertex_mask();
        (0..self.n).all(|a| {
            self.adj[a] & !all == 0
                && !self.adjacent(a, a)
                && bits(self.adj[a]).all(|b| self.adjacent(b, a))
        })
    }

    /// True when `perm` maps `self` onto `other` edge for edge.
    pub fn is_isomorphism(&self, other: &Graph, perm: &[usize]) -> bool {
        if self.n != other.n || perm.len() != self.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return false;
            }
            seen |= 1 << p;
        }
        self.edges()
            .into_iter()
            .all(|(a, b)| other.adjacent(perm[a], perm[b]))
    }
}

/// Checks that `perm` is a permutation of `0..n`.
pub fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

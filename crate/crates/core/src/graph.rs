//! Simple undirected graphs on at most 64 vertices.
//!
//! Every neighbourhood is one `u64`, so vertex subsets, deletions and
//! isolated-vertex counts are a handful of word operations. All constructors
//! label vertices deterministically: parts are concatenated in argument order.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices of some host graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    /// `{start, .., start + len - 1}`.
    pub fn range(start: usize, len: usize) -> Self {
        if len == 0 {
            return VertexSet::EMPTY;
        }
        VertexSet(low_mask(len) << start)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0, |acc, v| acc | (1u64 << v)))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Undirected simple graph with `1 <= n <= 64` vertices.
///
/// Invariants: `adj` is symmetric, loop-free, and has no bits at or above `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::Order(n))
    }
}

impl Graph {
    /// `n` isolated vertices (the graph `nK_1`).
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        let full = low_mask(n);
        let adj = (0..n).map(|v| full & !(1u64 << v)).collect();
        Ok(Graph { n, adj })
    }

    /// The path `P_n` with edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for i in 1..n {
            g.link(i - 1, i);
        }
        Ok(g)
    }

    /// The star `K_{1,leaves}` with the centre labelled 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        Graph::join(&Graph::empty(1)?, &Graph::empty(leaves)?)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbourhood masks, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        check_order(n)?;
        let full = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(Error::Vertex { vertex, order: n });
            }
            if (row >> v) & 1 == 1 {
                return Err(Error::Loop(v));
            }
            for u in VertexSet(row) {
                if (adj[u] >> v) & 1 == 0 {
                    return Err(Error::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::Vertex {
                vertex: v,
                order: self.n,
            })
        }
    }

    #[inline]
    fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    /// Copy of `self` with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    /// Copy of `self` with the edge `{u, v}` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Neighbourhood masks, one per vertex.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !low_mask(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.union(other)?;
        let left = low_mask(self.n);
        let right = low_mask(other.n) << self.n;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// `G_1 ∨ G_2 ∨ … ∨ G_k`: union plus all edges between consecutive parts.
    pub fn sequential_join(parts: &[Graph]) -> Result<Graph> {
        if parts.len() < 2 {
            return Err(Error::TooFewParts(parts.len()));
        }
        let total: usize = parts.iter().map(Graph::order).sum();
        check_order(total)?;
        let mut adj = Vec::with_capacity(total);
        let mut offsets = Vec::with_capacity(parts.len());
        for part in parts {
            offsets.push(adj.len());
            let off = adj.len();
            adj.extend(part.adj.iter().map(|&r| r << off));
        }
        for (i, pair) in parts.windows(2).enumerate() {
            let a = VertexSet::range(offsets[i], pair[0].n);
            let b = VertexSet::range(offsets[i + 1], pair[1].n);
            for v in a {
                adj[v] |= b.bits();
            }
            for v in b {
                adj[v] |= a.bits();
            }
        }
        Ok(Graph { n: total, adj })
    }

    pub fn complement(&self) -> Graph {
        let full = low_mask(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &r)| !r & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// `G - S`, relabelling the survivors in increasing order.
    ///
    /// Deleting every vertex is an error because graphs have order at least 1.
    pub fn induced_delete(&self, s: VertexSet) -> Result<Graph> {
        if !s.is_subset(self.vertices()) {
            let vertex = s.difference(self.vertices()).first().unwrap_or(64);
            return Err(Error::Vertex {
                vertex,
                order: self.n,
            });
        }
        let keep = self.vertices().difference(s);
        self.induced(keep)
    }

    /// `G[keep]`, relabelling in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let kept: Vec<usize> = keep.intersection(self.vertices()).to_vec();
        check_order(kept.len())?;
        let mut index = [usize::MAX; 64];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v] & keep.bits())
                    .iter()
                    .fold(0u64, |acc, u| acc | (1u64 << index[u]))
            })
            .collect();
        Ok(Graph { n: kept.len(), adj })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        if perm.len() != self.n {
            return Err(Error::Permutation(format!(
                "length {} for order {}",
                perm.len(),
                self.n
            )));
        }
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1u64 << p;
        }
        if seen != low_mask(self.n) {
            return Err(Error::Permutation("repeated image".into()));
        }
        let mut adj = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = VertexSet(row)
                .iter()
                .fold(0u64, |acc, u| acc | (1u64 << perm[u]));
        }
        Ok(Graph { n: self.n, adj })
    }

    /// `i(G)`, the number of isolated vertices.
    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|&&r| r == 0).count()
    }

    /// `i(G - S)` without building `G - S`.
    pub fn isolated_after_deleting(&self, s: VertexSet) -> usize {
        let rest = low_mask(self.n) & !s.bits();
        VertexSet(rest)
            .iter()
            .filter(|&v| self.adj[v] & rest == 0)
            .count()
    }

    /// Connected component containing `v`, restricted to `within`.
    pub(crate) fn component_within(&self, v: usize, within: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for u in VertexSet(frontier) {
                next |= self.adj[u];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Maximal connected blocks, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut left = low_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.component_within(v, left);
            out.push(VertexSet(comp));
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_within(0, low_mask(self.n)) == low_mask(self.n)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

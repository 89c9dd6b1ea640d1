//! Exhaustive graph generation for small orders.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for which every labelled graph can be listed (`2^36` masks).
pub const MAX_LABELED_ORDER: usize = 9;

/// Every labelled graph on `n` vertices, in increasing upper-triangle mask
/// order. Bit `k` of the mask is the `k`-th pair `(i, j)`, `i < j`, in
/// row-major order.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_LABELED_ORDER {
            return Err(Error::TooLarge {
                what: "labelled enumeration",
                order: n,
                limit: MAX_LABELED_ORDER,
            });
        }
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Ok(LabeledGraphs {
            n,
            end: 1u64 << pairs.len(),
            pairs,
            next: 0,
        })
    }

    /// Number of masks, `2^(n(n-1)/2)`.
    pub fn total(&self) -> u64 {
        self.end
    }

    fn build(&self, mask: u64) -> Graph {
        let mut adj = vec![0u64; self.n];
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (i, j) = self.pairs[k];
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Graph::from_adjacency(adj).expect("mask graphs are simple")
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.build(self.next);
        self.next += 1;
        Some(g)
    }
}

/// Connected labelled graphs on `n` vertices.
pub fn labeled_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(LabeledGraphs::new(n)?.filter(Graph::is_connected))
}

/// Calls `f` on every connected labelled graph whose degree sequence is
/// non-increasing in the vertex index.
///
/// Every unlabelled connected graph appears at least once (sort its
/// vertices by degree), so isomorphism-invariant properties can be checked
/// over this much smaller set. Rows are filled in vertex order; after row
/// `i` the degree of `i` is final and bounds every later partial degree.
pub fn for_each_degree_ordered_connected(n: usize, mut f: impl FnMut(&Graph)) -> Result<()> {
    if n == 0 || n > MAX_LABELED_ORDER + 1 {
        return Err(Error::TooLarge {
            what: "degree-ordered enumeration",
            order: n,
            limit: MAX_LABELED_ORDER + 1,
        });
    }
    let mut adj = vec![0u64; n];
    let mut deg = vec![0usize; n];
    rows(n, 0, usize::MAX, &mut adj, &mut deg, &mut f);
    Ok(())
}

fn rows(n: usize, i: usize, cap: usize, adj: &mut [u64], deg: &mut [usize], f: &mut impl FnMut(&Graph)) {
    if i == n {
        let g = Graph::from_adjacency(adj.to_vec()).expect("generated graphs are simple");
        if g.is_connected() {
            f(&g);
        }
        return;
    }
    let later = n - 1 - i;
    let base = deg[i];
    // every vertex after the first needs a neighbour somewhere
    for row in 0u64..(1u64 << later) {
        let d = base + row.count_ones() as usize;
        if d > cap || (n > 1 && d == 0) {
            continue;
        }
        let mut ok = true;
        for k in 0..later {
            let j = i + 1 + k;
            let pd = deg[j] + ((row >> k) & 1) as usize;
            if pd > d {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        for k in 0..later {
            if (row >> k) & 1 == 1 {
                let j = i + 1 + k;
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
                deg[j] += 1;
            }
        }
        deg[i] = d;
        rows(n, i + 1, d, adj, deg, f);
        deg[i] = base;
        for k in 0..later {
            if (row >> k) & 1 == 1 {
                let j = i + 1 + k;
                adj[i] &= !(1 << j);
                adj[j] &= !(1 << i);
                deg[j] -= 1;
            }
        }
    }
}

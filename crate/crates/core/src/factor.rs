//! Path factors with every path on at least two vertices.
//!
//! Two independent routes are provided. The subset criteria scan vertex sets
//! `S` by increasing size, then increasing bitmask. The search routes build
//! factors out of `P_2` and `P_3` pieces, which suffices because every path on
//! at least two vertices splits into such pieces.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{low_mask, Graph, VertexSet};

/// Order limits for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Subset scans (`deficiency_check`, `is_covered_structural`).
    pub subset_scan: usize,
    /// Witness-producing factor search.
    pub witness: usize,
    /// Edge-by-edge covered search.
    pub direct: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        subset_scan: 26,
        witness: 16,
        direct: 12,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}

fn check_limit(g: &Graph, what: &'static str, limit: usize) -> Result<()> {
    if g.order() > limit {
        Err(Error::TooLarge {
            what,
            order: g.order(),
            limit,
        })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationKind {
    /// `i(G-S) > 2|S|`
    Deficiency,
    /// `S` nonempty, `G-S` has an edge, and `i(G-S) > 2|S| - 1`
    NontrivialComponent,
    /// `G[S]` has an edge and `i(G-S) > 2|S| - 2`
    NonIndependentS,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::Deficiency => "DEFICIENCY",
            ViolationKind::NontrivialComponent => "NONTRIVIAL_COMPONENT",
            ViolationKind::NonIndependentS => "NON_INDEPENDENT_S",
        })
    }
}

/// A vertex set witnessing a failed criterion; `isolated > bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub s: VertexSet,
    pub isolated: usize,
    pub bound: usize,
}

impl Violation {
    /// `i(G-S) - 2|S|`.
    pub fn deficiency(&self) -> i64 {
        self.isolated as i64 - 2 * self.s.len() as i64
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} S={:?} i(G-S)={} bound={}",
            self.kind, self.s, self.isolated, self.bound
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "violation", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(v) => Some(v),
        }
    }
}

/// Per-subset quantities gathered in one pass.
struct SubsetStats {
    isolated: usize,
    rest_has_edge: bool,
    s_has_edge: bool,
}

fn subset_stats(adj: &[u64], full: u64, s: u64) -> SubsetStats {
    let rest = full & !s;
    let mut isolated = 0;
    let mut rest_has_edge = false;
    let mut bits = rest;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if adj[v] & rest == 0 {
            isolated += 1;
        } else {
            rest_has_edge = true;
        }
    }
    let mut s_has_edge = false;
    let mut bits = s;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if adj[v] & s != 0 {
            s_has_edge = true;
            break;
        }
    }
    SubsetStats {
        isolated,
        rest_has_edge,
        s_has_edge,
    }
}

/// Calls `f` on every `k`-subset of `{0..n}` in increasing mask order until
/// it returns `false`.
fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let end = 1u128 << n;
    let mut s: u128 = (1u128 << k) - 1;
    while s < end {
        if !f(s as u64) {
            return;
        }
        // next mask with the same popcount
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

/// Checks `i(G-S) <= 2|S|` for every `S`.
///
/// On failure the witness has maximum deficiency `i(G-S) - 2|S|`, then
/// minimum `|S|`, then smallest bitmask.
pub fn deficiency_check(g: &Graph) -> Result<Verdict> {
    deficiency_check_with(g, &Limits::DEFAULT)
}

pub fn deficiency_check_with(g: &Graph, limits: &Limits) -> Result<Verdict> {
    check_limit(g, "subset scan", limits.subset_scan)?;
    let n = g.order();
    let adj = g.adjacency();
    let full = low_mask(n);
    let mut best: Option<Violation> = None;
    let mut best_def = 0i64;
    for k in 0..=n {
        // |S| = k leaves at most n - k isolated vertices
        if n as i64 - 3 * k as i64 <= best_def {
            break;
        }
        for_each_k_subset(n, k, |s| {
            let st = subset_stats(adj, full, s);
            let def = st.isolated as i64 - 2 * k as i64;
            if def > best_def {
                best_def = def;
                best = Some(Violation {
                    kind: ViolationKind::Deficiency,
                    s: VertexSet::from_bits(s),
                    isolated: st.isolated,
                    bound: 2 * k,
                });
            }
            true
        });
    }
    Ok(best.map_or(Verdict::Pass, Verdict::Fail))
}

/// Checks the three covered conditions for every `S`, returning the first
/// failing set in (size, bitmask) order, so the witness has minimum size.
pub fn is_covered_structural(g: &Graph) -> Result<Verdict> {
    is_covered_structural_with(g, &Limits::DEFAULT)
}

pub fn is_covered_structural_with(g: &Graph, limits: &Limits) -> Result<Verdict> {
    check_limit(g, "subset scan", limits.subset_scan)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let adj = g.adjacency();
    let full = low_mask(n);
    let mut found: Option<Violation> = None;
    for k in 0..=n {
        // the weakest bound is 2k - 2, and at most n - k vertices can be isolated
        if k >= 1 && n + 2 <= 3 * k {
            break;
        }
        for_each_k_subset(n, k, |s| {
            let st = subset_stats(adj, full, s);
            let i = st.isolated;
            let v = if i > 2 * k {
                Some((ViolationKind::Deficiency, 2 * k))
            } else if k > 0 && st.rest_has_edge && i + 1 > 2 * k {
                Some((ViolationKind::NontrivialComponent, 2 * k - 1))
            } else if st.s_has_edge && i + 2 > 2 * k {
                Some((ViolationKind::NonIndependentS, 2 * k - 2))
            } else {
                None
            };
            match v {
                Some((kind, bound)) => {
                    found = Some(Violation {
                        kind,
                        s: VertexSet::from_bits(s),
                        isolated: i,
                        bound,
                    });
                    false
                }
                None => true,
            }
        });
        if found.is_some() {
            break;
        }
    }
    Ok(found.map_or(Verdict::Pass, Verdict::Fail))
}

/// A spanning set of vertex-disjoint paths, each on at least two vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorWitness {
    pub paths: Vec<Vec<usize>>,
}

impl FactorWitness {
    /// Checks coverage, disjointness, path lengths and adjacency against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.order();
        let mut seen = vec![false; n];
        for p in &self.paths {
            if p.len() < 2 {
                return Err(format!("path {p:?} has fewer than two vertices"));
            }
            for &v in p {
                if v >= n {
                    return Err(format!("vertex {v} out of range"));
                }
                if seen[v] {
                    return Err(format!("vertex {v} used twice"));
                }
                seen[v] = true;
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(format!("{} and {} are not adjacent", w[0], w[1]));
                }
            }
        }
        match seen.iter().position(|&b| !b) {
            Some(v) => Err(format!("vertex {v} is not covered")),
            None => Ok(()),
        }
    }

    /// Whether some path traverses the edge `{u, v}`.
    pub fn uses_edge(&self, u: usize, v: usize) -> bool {
        self.paths.iter().any(|p| {
            p.windows(2)
                .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
        })
    }
}

/// Backtracking cover of `todo` by `P_2`/`P_3` pieces.
struct PieceSearch<'a> {
    adj: &'a [u64],
    dead: HashSet<u64>,
    pieces: Vec<Vec<usize>>,
}

impl<'a> PieceSearch<'a> {
    fn new(g: &'a Graph) -> Self {
        PieceSearch {
            adj: g.adjacency(),
            dead: HashSet::new(),
            pieces: Vec::new(),
        }
    }

    fn cover(&mut self, todo: u64) -> bool {
        if todo == 0 {
            return true;
        }
        if self.dead.contains(&todo) {
            return false;
        }
        // branch on the uncovered vertex with fewest uncovered neighbours
        let mut pick = usize::MAX;
        let mut pick_deg = u32::MAX;
        let mut bits = todo;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let d = (self.adj[v] & todo).count_ones();
            if d == 0 {
                self.dead.insert(todo);
                return false;
            }
            if d < pick_deg {
                pick_deg = d;
                pick = v;
            }
        }
        let v = pick;
        let nb = self.adj[v] & todo;
        let rest = todo & !(1u64 << v);

        for u in VertexSet::from_bits(nb) {
            let rest_u = rest & !(1u64 << u);
            if self.try_piece(vec![v, u], rest_u) {
                return true;
            }
            for w in VertexSet::from_bits(self.adj[u] & rest_u) {
                if self.try_piece(vec![v, u, w], rest_u & !(1u64 << w)) {
                    return true;
                }
            }
            for w in VertexSet::from_bits(nb & rest_u & !low_mask(u + 1)) {
                if self.try_piece(vec![u, v, w], rest_u & !(1u64 << w)) {
                    return true;
                }
            }
        }
        self.dead.insert(todo);
        false
    }

    fn try_piece(&mut self, piece: Vec<usize>, todo: u64) -> bool {
        self.pieces.push(piece);
        if self.cover(todo) {
            return true;
        }
        self.pieces.pop();
        false
    }
}

fn cover_vertices(g: &Graph, todo: u64) -> Option<Vec<Vec<usize>>> {
    let mut search = PieceSearch::new(g);
    search.cover(todo).then_some(search.pieces)
}

/// A factor found by backtracking, or `None` if none exists.
pub fn find_p2_factor(g: &Graph) -> Result<Option<FactorWitness>> {
    find_p2_factor_with(g, &Limits::DEFAULT)
}

pub fn find_p2_factor_with(g: &Graph, limits: &Limits) -> Result<Option<FactorWitness>> {
    check_limit(g, "factor search", limits.witness)?;
    Ok(cover_vertices(g, low_mask(g.order())).map(|paths| FactorWitness { paths }))
}

/// Factor existence: backtracking up to the witness limit, the deficiency
/// criterion beyond it.
pub fn has_p2_factor(g: &Graph) -> Result<bool> {
    has_p2_factor_with(g, &Limits::DEFAULT)
}

pub fn has_p2_factor_with(g: &Graph, limits: &Limits) -> Result<bool> {
    if g.order() <= limits.witness {
        Ok(find_p2_factor_with(g, limits)?.is_some())
    } else {
        Ok(deficiency_check_with(g, limits)?.is_pass())
    }
}

/// A factor in which `u` and `w` are consecutive on some path.
///
/// The path through the edge can always be cut so that the edge sits in a
/// piece of two to four vertices and everything else splits into `P_2`/`P_3`
/// pieces, so only those pieces are tried.
pub fn factor_containing_edge(g: &Graph, u: usize, w: usize) -> Result<Option<FactorWitness>> {
    if !g.has_edge(u, w) {
        return Err(Error::Config(format!("{u}-{w} is not an edge")));
    }
    let adj = g.adjacency();
    let full = low_mask(g.order());
    let base = full & !(1u64 << u) & !(1u64 << w);

    let attempt = |piece: Vec<usize>, rest: u64| {
        cover_vertices(g, rest).map(|mut paths| {
            paths.insert(0, piece);
            FactorWitness { paths }
        })
    };

    if let Some(f) = attempt(vec![u, w], base) {
        return Ok(Some(f));
    }
    let xs = VertexSet::from_bits(adj[u] & base);
    let ys = VertexSet::from_bits(adj[w] & base);
    for x in xs {
        if let Some(f) = attempt(vec![x, u, w], base & !(1u64 << x)) {
            return Ok(Some(f));
        }
    }
    for y in ys {
        if let Some(f) = attempt(vec![u, w, y], base & !(1u64 << y)) {
            return Ok(Some(f));
        }
    }
    for x in xs {
        for y in ys {
            if x != y {
                if let Some(f) = attempt(vec![x, u, w, y], base & !(1u64 << x) & !(1u64 << y)) {
                    return Ok(Some(f));
                }
            }
        }
    }
    Ok(None)
}

/// Covered by definition: a factor exists and every edge lies on a path of
/// some factor. A graph without a factor (e.g. `K_1`) is not covered.
pub fn is_covered_direct(g: &Graph) -> Result<bool> {
    is_covered_direct_with(g, &Limits::DEFAULT)
}

pub fn is_covered_direct_with(g: &Graph, limits: &Limits) -> Result<bool> {
    check_limit(g, "direct covered search", limits.direct)?;
    let Some(first) = find_p2_factor_with(g, &Limits { witness: limits.direct, ..*limits })? else {
        return Ok(false);
    };
    let mut covered = HashSet::new();
    let mark = |f: &FactorWitness, covered: &mut HashSet<(usize, usize)>| {
        for p in &f.paths {
            for e in p.windows(2) {
                covered.insert((e[0].min(e[1]), e[0].max(e[1])));
            }
        }
    };
    mark(&first, &mut covered);
    for (u, w) in g.edges() {
        if covered.contains(&(u, w)) {
            continue;
        }
        match factor_containing_edge(g, u, w)? {
            Some(f) => mark(&f, &mut covered),
            None => return Ok(false),
        }
    }
    Ok(true)
}

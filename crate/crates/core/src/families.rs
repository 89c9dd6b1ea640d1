//! Named graph families, each with its equitable partition.
//!
//! Blocks are stored in the order of the corresponding quotient-matrix rows,
//! so quotient entries can be compared without permuting.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectral::Partition;
use crate::thresholds::CaseId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Complete,
    Path,
    /// `K_{n-3} ∨ K_1 ∨ K̄_2`
    Extremal,
    /// `K_1 ∨ (K_{n-4} ∪ 3K_1)`
    Claim1,
    CaseB1,
    CaseB2,
    CaseB3,
    CaseB4,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Complete,
        Family::Path,
        Family::Extremal,
        Family::Claim1,
        Family::CaseB1,
        Family::CaseB2,
        Family::CaseB3,
        Family::CaseB4,
    ];

    pub fn case(self) -> Option<CaseId> {
        match self {
            Family::Claim1 => Some(CaseId::B0),
            Family::CaseB1 => Some(CaseId::B1),
            Family::CaseB2 => Some(CaseId::B2),
            Family::CaseB3 => Some(CaseId::B3),
            Family::CaseB4 => Some(CaseId::B4),
            _ => None,
        }
    }

    /// Whether the family takes the parameter `s`.
    pub fn needs_s(self) -> bool {
        matches!(self, Family::CaseB1 | Family::CaseB2 | Family::CaseB3 | Family::CaseB4)
    }
}

impl From<CaseId> for Family {
    fn from(c: CaseId) -> Self {
        match c {
            CaseId::B0 => Family::Claim1,
            CaseId::B1 => Family::CaseB1,
            CaseId::B2 => Family::CaseB2,
            CaseId::B3 => Family::CaseB3,
            CaseId::B4 => Family::CaseB4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Extremal => "extremal",
            Family::Claim1 => "claim1",
            Family::CaseB1 => "case-b1",
            Family::CaseB2 => "case-b2",
            Family::CaseB3 => "case-b3",
            Family::CaseB4 => "case-b4",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Config(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMeta {
    pub family: Family,
    pub n: usize,
    pub s: Option<usize>,
    /// Order of the clique component beside the isolated part.
    pub n1: Option<usize>,
    /// Number of isolated vertices left after deleting the `K_s` block.
    pub t: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyInstance {
    pub graph: Graph,
    pub partition: Partition,
    pub meta: FamilyMeta,
}

impl FamilyInstance {
    pub fn block(&self, i: usize) -> VertexSet {
        self.partition.blocks()[i]
    }

    /// The vertex set whose deletion exposes the family's defining
    /// structure: the hub of `claim1`, the middle vertex of `extremal`, the
    /// `K_s` block of the case graphs.
    pub fn cut_set(&self) -> Option<VertexSet> {
        match self.meta.family {
            Family::Claim1 => Some(self.block(2)),
            Family::Extremal => Some(self.block(0)),
            f if f.needs_s() => Some(self.block(0)),
            _ => None,
        }
    }
}

fn too_small(family: Family, detail: String) -> Error {
    Error::FamilyRange {
        family: family.to_string(),
        detail,
    }
}

/// `K_n` with a single block.
pub fn complete_graph(n: usize) -> Result<FamilyInstance> {
    let graph = Graph::complete(n)?;
    Ok(FamilyInstance {
        partition: Partition::consecutive(&[n])?,
        graph,
        meta: FamilyMeta {
            family: Family::Complete,
            n,
            s: None,
            n1: None,
            t: None,
        },
    })
}

/// `P_n` with singleton blocks.
pub fn path_graph(n: usize) -> Result<FamilyInstance> {
    let graph = Graph::path(n)?;
    Ok(FamilyInstance {
        partition: Partition::singletons(n),
        graph,
        meta: FamilyMeta {
            family: Family::Path,
            n,
            s: None,
            n1: None,
            t: None,
        },
    })
}

/// `K_1 ∨ (K_{n-4} ∪ 3K_1)`; hub is vertex 0. Blocks: the three pendants,
/// the clique, the hub.
pub fn claim1_graph(n: usize) -> Result<FamilyInstance> {
    if n < 6 {
        return Err(too_small(Family::Claim1, format!("n = {n} < 6")));
    }
    let graph = Graph::complete(1)?.join(&Graph::complete(n - 4)?.union(&Graph::empty(3)?)?)?;
    let partition = Partition::new(
        n,
        vec![VertexSet::range(n - 3, 3), VertexSet::range(1, n - 4), VertexSet::singleton(0)],
    )?;
    Ok(FamilyInstance {
        graph,
        partition,
        meta: FamilyMeta {
            family: Family::Claim1,
            n,
            s: Some(1),
            n1: Some(n - 4),
            t: Some(3),
        },
    })
}

/// `K_{n-3} ∨ K_1 ∨ K̄_2`, labelled clique first (`0..n-3`), then the middle
/// vertex `n-3`, then the pair. Blocks: middle, clique, pair.
pub fn extremal_graph(n: usize) -> Result<FamilyInstance> {
    if n < 5 {
        return Err(too_small(Family::Extremal, format!("n = {n} < 5")));
    }
    let graph = Graph::sequential_join(&[Graph::complete(n - 3)?, Graph::complete(1)?, Graph::empty(2)?])?;
    let partition = Partition::new(
        n,
        vec![VertexSet::singleton(n - 3), VertexSet::range(0, n - 3), VertexSet::range(n - 2, 2)],
    )?;
    Ok(FamilyInstance {
        graph,
        partition,
        meta: FamilyMeta {
            family: Family::Extremal,
            n,
            s: Some(1),
            n1: Some(n - 3),
            t: Some(2),
        },
    })
}

/// `K_s ∨ (K_{n_1} ∪ tK_1)` for the given case; `B0` gives [`claim1_graph`].
///
/// Labels: `K_s` first, then `K_{n_1}`, then the isolated part. For `B3` and
/// `B4` (`n_1 = 0`) the partition has two blocks.
pub fn case_graph(case: CaseId, n: usize, s: usize) -> Result<FamilyInstance> {
    case.check(n, s)?;
    let (n1, t) = match case {
        CaseId::B0 => return claim1_graph(n),
        CaseId::B1 => (n - 3 * s, 2 * s),
        CaseId::B2 => (n + 1 - 3 * s, 2 * s - 1),
        CaseId::B3 => (0, 2 * s - 1),
        CaseId::B4 => (0, 2 * s),
    };
    let outer = if n1 == 0 {
        Graph::empty(t)?
    } else {
        Graph::complete(n1)?.union(&Graph::empty(t)?)?
    };
    let graph = Graph::complete(s)?.join(&outer)?;
    let sizes: Vec<usize> = [s, n1, t].into_iter().filter(|&x| x > 0).collect();
    Ok(FamilyInstance {
        graph,
        partition: Partition::consecutive(&sizes)?,
        meta: FamilyMeta {
            family: case.into(),
            n,
            s: Some(s),
            n1: Some(n1),
            t: Some(t),
        },
    })
}

/// Builds any family from CLI-style parameters.
pub fn build(family: Family, n: usize, s: Option<usize>) -> Result<FamilyInstance> {
    match family {
        Family::Complete => complete_graph(n),
        Family::Path => path_graph(n),
        Family::Extremal => extremal_graph(n),
        Family::Claim1 => claim1_graph(n),
        other => {
            let case = other.case().expect("case family");
            let s = s.ok_or_else(|| too_small(other, "parameter s is required".into()))?;
            case_graph(case, n, s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::is_equitable;

    #[test]
    fn claim1_shape() {
        let h = claim1_graph(14).unwrap();
        let d = h.graph.degrees();
        assert_eq!(d[0], 13);
        assert!(d[1..11].iter().all(|&x| x == 10));
        assert!(d[11..].iter().all(|&x| x == 1));
        assert!(is_equitable(&h.graph, &h.partition).unwrap());
        assert_eq!(h.partition.sizes(), vec![3, 10, 1]);
        // K_{n-3} = hub plus clique
        let sub = h.graph.induced(VertexSet::range(0, 11)).unwrap();
        assert_eq!(sub, Graph::complete(11).unwrap());
        assert!(claim1_graph(5).is_err());
    }

    #[test]
    fn extremal_shape() {
        for n in 5..=30 {
            let e = extremal_graph(n).unwrap();
            assert!(e.graph.is_connected());
            assert!(is_equitable(&e.graph, &e.partition).unwrap());
            let other = Graph::complete(1)
                .unwrap()
                .join(&Graph::complete(n - 3).unwrap().union(&Graph::empty(2).unwrap()).unwrap())
                .unwrap();
            // move the hub from 0 to n-3
            let mut perm: Vec<usize> = vec![n - 3];
            perm.extend(0..n - 3);
            perm.extend([n - 2, n - 1]);
            assert_eq!(other.permuted(&perm).unwrap(), e.graph);
        }
        assert_eq!(extremal_graph(14).unwrap().graph.edge_count(), 68);
        assert!(extremal_graph(4).is_err());
    }

    #[test]
    fn case_shapes() {
        let b3 = case_graph(CaseId::B3, 14, 5).unwrap();
        assert_eq!(b3.partition.sizes(), vec![5, 9]);
        assert_eq!(b3.graph.edge_count(), 10 + 45);
        let b1 = case_graph(CaseId::B1, 14, 2).unwrap();
        assert_eq!(b1.partition.sizes(), vec![2, 8, 4]);
        let b1s1 = case_graph(CaseId::B1, 14, 1).unwrap();
        assert_eq!(b1s1.partition.sizes(), vec![1, 11, 2]);
        let b2 = case_graph(CaseId::B2, 13, 3).unwrap();
        assert_eq!(b2.partition.sizes(), vec![3, 5, 5]);
        let b4 = case_graph(CaseId::B4, 15, 5).unwrap();
        assert_eq!(b4.partition.sizes(), vec![5, 10]);
        for inst in [b3, b1, b1s1, b2, b4] {
            assert!(inst.graph.is_connected());
            assert!(is_equitable(&inst.graph, &inst.partition).unwrap());
            let cut = inst.cut_set().unwrap();
            assert_eq!(cut.len(), inst.meta.s.unwrap());
            let rest = inst.graph.induced_delete(cut).unwrap();
            assert_eq!(rest.connected_components().len(), inst.meta.t.unwrap() + (inst.meta.n1 != Some(0)) as usize);
        }
        assert!(case_graph(CaseId::B4, 14, 5).is_err());
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("wheel".parse::<Family>().is_err());
        assert!(build(Family::CaseB1, 14, None).is_err());
        assert_eq!(build(Family::Complete, 4, None).unwrap().graph.edge_count(), 6);
    }
}

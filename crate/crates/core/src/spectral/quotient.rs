//! Vertex partitions and the block-average (quotient) matrix of `A_α`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectral::matrix::{check_alpha, SymMatrix};
use crate::thresholds::poly::{Cubic, Quadratic};
use crate::tolerance::Tolerances;

/// Ordered, disjoint, nonempty blocks covering `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    order: usize,
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new(order: usize, blocks: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for (i, &b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::Partition(format!("block {i} is empty")));
            }
            if !seen.intersection(b).is_empty() {
                return Err(Error::Partition(format!("block {i} overlaps an earlier block")));
            }
            seen = seen.union(b);
        }
        if seen != VertexSet::full(order) {
            return Err(Error::Partition(format!(
                "blocks cover {:?}, expected all {order} vertices",
                seen
            )));
        }
        Ok(Partition { order, blocks })
    }

    /// Consecutive blocks of the given sizes, starting at vertex 0.
    pub fn consecutive(sizes: &[usize]) -> Result<Self> {
        let mut start = 0;
        let mut blocks = Vec::with_capacity(sizes.len());
        for &len in sizes {
            blocks.push(VertexSet::range(start, len));
            start += len;
        }
        Partition::new(start, blocks)
    }

    pub fn singletons(order: usize) -> Self {
        Partition {
            order,
            blocks: (0..order).map(VertexSet::singleton).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    fn check_host(&self, g: &Graph) -> Result<()> {
        if self.order == g.order() {
            Ok(())
        } else {
            Err(Error::Partition(format!(
                "partition of {} vertices used with a graph of order {}",
                self.order,
                g.order()
            )))
        }
    }
}

/// True iff every vertex of block `i` has the same number of neighbours in
/// block `j`, for all `i`, `j`.
pub fn is_equitable(g: &Graph, pi: &Partition) -> Result<bool> {
    pi.check_host(g)?;
    Ok(pi.blocks.iter().all(|bi| {
        pi.blocks.iter().all(|bj| {
            let mut counts = bi.iter().map(|v| g.neighbors(v).intersection(*bj).len());
            let first = counts.next();
            counts.all(|c| Some(c) == first)
        })
    }))
}

/// Quotient matrix of `A_α(G)` for a partition: entry `(i, j)` is the average
/// row sum of the block with rows in `V_i` and columns in `V_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    dim: usize,
    entries: Vec<f64>,
    partition: Partition,
    equitable: bool,
}

pub fn quotient(g: &Graph, alpha: f64, pi: &Partition) -> Result<QuotientMatrix> {
    check_alpha(alpha)?;
    let equitable = is_equitable(g, pi)?;
    let r = pi.len();
    let mut entries = vec![0.0; r * r];
    for (i, bi) in pi.blocks.iter().enumerate() {
        let size = bi.len() as f64;
        for (j, bj) in pi.blocks.iter().enumerate() {
            let adjacent: usize = bi.iter().map(|v| g.neighbors(v).intersection(*bj).len()).sum();
            let diagonal: usize = if i == j {
                bi.iter().map(|v| g.degree(v)).sum()
            } else {
                0
            };
            entries[i * r + j] =
                ((1.0 - alpha) * adjacent as f64 + alpha * diagonal as f64) / size;
        }
    }
    Ok(QuotientMatrix {
        dim: r,
        entries,
        partition: pi.clone(),
        equitable,
    })
}

impl QuotientMatrix {
    /// A quotient given directly by its entries (not tied to a graph).
    /// Without block sizes, dimensions above 3 fall back to power iteration.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Config("quotient rows must be square".into()));
        }
        Ok(QuotientMatrix {
            dim,
            entries: rows.concat(),
            partition: Partition::singletons(dim),
            equitable: false,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.dim).map(<[f64]>::to_vec).collect()
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    /// Monic characteristic polynomial `det(xI - Q)`, coefficients from the
    /// leading term down (Faddeev–LeVerrier).
    pub fn char_poly(&self) -> Vec<f64> {
        let n = self.dim;
        let mut coeffs = vec![0.0; n + 1];
        coeffs[0] = 1.0;
        let mut m = vec![0.0; n * n];
        for k in 1..=n {
            // M_k = Q·M_{k-1} + c_{k-1}·I
            let mut next = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..n {
                    let mut acc = 0.0;
                    for l in 0..n {
                        acc += self.entries[i * n + l] * m[l * n + j];
                    }
                    next[i * n + j] = acc;
                }
                next[i * n + i] += coeffs[k - 1];
            }
            m = next;
            let mut tr = 0.0;
            for i in 0..n {
                for l in 0..n {
                    tr += self.entries[i * n + l] * m[l * n + i];
                }
            }
            coeffs[k] = -tr / k as f64;
        }
        coeffs
    }

    /// Largest real eigenvalue.
    ///
    /// Up to dimension 3 this is the largest real root of the characteristic
    /// polynomial. Larger equitable quotients are symmetrised with the block
    /// sizes and diagonalised; anything else uses shifted power iteration.
    pub fn largest_eigenvalue(&self) -> Result<f64> {
        self.largest_eigenvalue_with(&Tolerances::DEFAULT)
    }

    pub fn largest_eigenvalue_with(&self, tol: &Tolerances) -> Result<f64> {
        match self.dim {
            0 => Err(Error::Config("empty quotient".into())),
            1 => Ok(self.entries[0]),
            2 => {
                let c = self.char_poly();
                Quadratic::new(c[0], c[1], c[2])
                    .largest_real_root()?
                    .ok_or(Error::NonConvergence("quotient eigenvalue (complex pair)"))
            }
            3 => {
                let c = self.char_poly();
                Cubic::new(c[0], c[1], c[2], c[3]).largest_real_root()
            }
            _ if self.equitable => Ok(self.symmetrized().eigenvalues_with(tol)[0]),
            _ => self.power_iteration(tol),
        }
    }

    /// `R^{1/2} Q R^{-1/2}` with `R = diag(block sizes)`; symmetric whenever
    /// the partition is equitable for a symmetric source matrix.
    pub fn symmetrized(&self) -> SymMatrix {
        let sizes: Vec<f64> = self.partition.sizes().iter().map(|&s| s as f64).collect();
        let n = self.dim;
        SymMatrix::from_lower(n, |i, j| {
            let upper = (sizes[i] / sizes[j]).sqrt() * self.entries[i * n + j];
            let lower = (sizes[j] / sizes[i]).sqrt() * self.entries[j * n + i];
            0.5 * (upper + lower)
        })
    }

    fn power_iteration(&self, tol: &Tolerances) -> Result<f64> {
        let n = self.dim;
        // shift by the row-sum bound so the Perron root dominates strictly
        let shift = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max);
        let mut x = vec![1.0 / (n as f64).sqrt(); n];
        let mut lambda = f64::NAN;
        for _ in 0..tol.power_max_iter {
            let mut y: Vec<f64> = (0..n)
                .map(|i| {
                    shift * x[i]
                        + (0..n).map(|j| self.entries[i * n + j] * x[j]).sum::<f64>()
                })
                .collect();
            let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm == 0.0 {
                return Ok(-shift);
            }
            let next = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>();
            y.iter_mut().for_each(|v| *v /= norm);
            let delta = x.iter().zip(&y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            x = y;
            if (next - lambda).abs() <= tol.power_tol * next.abs().max(1.0)
                && delta <= 1e2 * tol.power_tol
            {
                return Ok(next - shift);
            }
            lambda = next;
        }
        Err(Error::NonConvergence("power iteration"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::matrix::spectral_radius;

    fn approx(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12
    }

    fn h_graph(n: usize) -> Graph {
        let inner = Graph::complete(n - 4).unwrap().union(&Graph::empty(3).unwrap()).unwrap();
        Graph::complete(1).unwrap().join(&inner).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::consecutive(&[2, 3]).is_ok());
        assert!(Partition::new(3, vec![VertexSet::range(0, 2)]).is_err());
        assert!(Partition::new(2, vec![VertexSet::range(0, 2), VertexSet::EMPTY]).is_err());
        assert!(Partition::new(
            3,
            vec![VertexSet::range(0, 2), VertexSet::range(1, 2)]
        )
        .is_err());
        let p = Partition::consecutive(&[2, 2]).unwrap();
        assert!(is_equitable(&Graph::path(5).unwrap(), &p).is_err());
    }

    #[test]
    fn equitable_examples() {
        let n = 14;
        let h = h_graph(n);
        // blocks (3K_1, K_{n-4}, K_1) in that order
        let pi = Partition::new(
            n,
            vec![
                VertexSet::range(n - 3, 3),
                VertexSet::range(1, n - 4),
                VertexSet::singleton(0),
            ],
        )
        .unwrap();
        assert!(is_equitable(&h, &pi).unwrap());

        let p5 = Graph::path(5).unwrap();
        assert!(is_equitable(&p5, &Partition::singletons(5)).unwrap());

        let p4 = Graph::path(4).unwrap();
        let ends = Partition::new(
            4,
            vec![VertexSet::from_vertices([0, 3]), VertexSet::from_vertices([1, 2])],
        )
        .unwrap();
        assert!(is_equitable(&p4, &ends).unwrap());
        let lopsided = Partition::consecutive(&[1, 3]).unwrap();
        assert!(!is_equitable(&p4, &lopsided).unwrap());
    }

    #[test]
    fn claim_quotient_entries() {
        let (n, alpha) = (14usize, 0.3);
        let h = h_graph(n);
        let pi = Partition::new(
            n,
            vec![
                VertexSet::range(n - 3, 3),
                VertexSet::range(1, n - 4),
                VertexSet::singleton(0),
            ],
        )
        .unwrap();
        let q = quotient(&h, alpha, &pi).unwrap();
        let nf = n as f64;
        let expected = [
            [alpha, 0.0, 1.0 - alpha],
            [0.0, nf + alpha - 5.0, 1.0 - alpha],
            [3.0 * (1.0 - alpha), (1.0 - alpha) * (nf - 4.0), alpha * nf - alpha],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert!(approx(q.get(i, j), expected[i][j]), "({i},{j})");
            }
        }
        let rho = spectral_radius(&h, alpha).unwrap();
        assert!((q.largest_eigenvalue().unwrap() - rho).abs() <= 1e-9);
    }

    #[test]
    fn one_block_quotient() {
        let g = Graph::path(5).unwrap();
        let q = quotient(&g, 0.4, &Partition::consecutive(&[5]).unwrap()).unwrap();
        assert_eq!(q.dim(), 1);
        let avg = 2.0 * g.edge_count() as f64 / 5.0;
        assert!(approx(q.get(0, 0), avg));
        assert!(approx(q.largest_eigenvalue().unwrap(), avg));
        assert!(!q.is_equitable());
    }

    #[test]
    fn char_poly_of_small_matrices() {
        let q = QuotientMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert_eq!(q.char_poly(), vec![1.0, -4.0, 3.0]);
        assert!(approx(q.largest_eigenvalue().unwrap(), 3.0));
        let rot = QuotientMatrix::from_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        assert!(rot.largest_eigenvalue().is_err());
    }

    #[test]
    fn large_quotients_use_symmetrised_or_power_route() {
        // the singleton partition of a path has the adjacency itself as quotient
        let g = Graph::path(6).unwrap();
        let q = quotient(&g, 0.2, &Partition::singletons(6)).unwrap();
        assert!(q.is_equitable());
        let rho = spectral_radius(&g, 0.2).unwrap();
        assert!((q.largest_eigenvalue().unwrap() - rho).abs() <= 1e-10);

        let raw = QuotientMatrix::from_rows(&q.rows()).unwrap();
        assert!(!raw.is_equitable());
        assert!((raw.largest_eigenvalue().unwrap() - rho).abs() <= 1e-9);
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tolerance::Tolerances;

pub fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::Alpha(alpha))
    }
}

/// Dense real symmetric matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    /// Builds from rows, requiring exact symmetry.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        let mut m = SymMatrix::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Config(format!(
                    "row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            m.data[i * dim..(i + 1) * dim].copy_from_slice(row);
        }
        for i in 0..dim {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::Asymmetric(i, j));
                }
            }
        }
        Ok(m)
    }

    /// Builds from the lower triangle (including the diagonal), row by row.
    pub fn from_lower(dim: usize, mut entry: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..=i {
                m.set_sym(i, j, entry(i, j));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] = v;
        self.data[j * self.dim + i] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.dim)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// All eigenvalues, descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.eigenvalues_with(&Tolerances::DEFAULT)
    }

    pub fn eigenvalues_with(&self, tol: &Tolerances) -> Vec<f64> {
        let mut ev = jacobi_eigenvalues(self.dim, self.data.clone(), tol);
        ev.sort_by(|a, b| b.total_cmp(a));
        ev
    }

    /// Largest eigenvalue (0 for the empty matrix).
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues().first().copied().unwrap_or(0.0)
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.dim).map(|i| self.row(i)))
            .finish()
    }
}

/// `A_α(G) = α·D(G) + (1-α)·A(G)`.
pub fn a_alpha(g: &Graph, alpha: f64) -> Result<SymMatrix> {
    check_alpha(alpha)?;
    let off = 1.0 - alpha;
    Ok(SymMatrix::from_lower(g.order(), |i, j| {
        if i == j {
            alpha * g.degree(i) as f64
        } else if g.has_edge(i, j) {
            off
        } else {
            0.0
        }
    }))
}

/// `ρ_α(G)`.
pub fn spectral_radius(g: &Graph, alpha: f64) -> Result<f64> {
    Ok(a_alpha(g, alpha)?.spectral_radius())
}

/// Cyclic Jacobi rotations on a private copy; returns the diagonal.
fn jacobi_eigenvalues(n: usize, mut a: Vec<f64>, tol: &Tolerances) -> Vec<f64> {
    let frob = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if n <= 1 || frob == 0.0 {
        return (0..n).map(|i| a[i * n + i]).collect();
    }
    let target = tol.jacobi_rel * frob;

    for _ in 0..tol.jacobi_max_sweeps {
        let mut off = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += a[i * n + j] * a[i * n + j];
                }
            }
        }
        if off.sqrt() <= target {
            break;
        }

        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.is_infinite() {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-10
    }

    #[test]
    fn a_alpha_special_values() {
        let g = Graph::path(4).unwrap();
        let a0 = a_alpha(&g, 0.0).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a0.get(i, j), g.has_edge(i, j) as u8 as f64);
            }
        }
        let half = a_alpha(&g, 0.5).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let q = if i == j {
                    g.degree(i) as f64
                } else {
                    g.has_edge(i, j) as u8 as f64
                };
                assert_eq!(half.get(i, j), q / 2.0);
            }
        }
        let k2 = a_alpha(&Graph::complete(2).unwrap(), 0.3).unwrap();
        assert_eq!(k2.row(0), &[0.3, 0.7]);
        assert_eq!(k2.row(1), &[0.7, 0.3]);
    }

    #[test]
    fn alpha_range() {
        let g = Graph::complete(3).unwrap();
        assert_eq!(a_alpha(&g, 1.0), Err(Error::Alpha(1.0)));
        assert!(a_alpha(&g, -0.1).is_err());
        assert!(a_alpha(&g, f64::NAN).is_err());
    }

    #[test]
    fn small_spectra() {
        let alpha = 0.3;
        let ev = a_alpha(&Graph::complete(2).unwrap(), alpha)
            .unwrap()
            .eigenvalues();
        assert!(close(ev[0], 1.0) && close(ev[1], 2.0 * alpha - 1.0));

        let ev = a_alpha(&Graph::complete(3).unwrap(), 0.0)
            .unwrap()
            .eigenvalues();
        assert!(close(ev[0], 2.0) && close(ev[1], -1.0) && close(ev[2], -1.0));

        let star = Graph::star(3).unwrap();
        assert!(close(spectral_radius(&star, 0.0).unwrap(), 3f64.sqrt()));
        assert_eq!(SymMatrix::zeros(4).spectral_radius(), 0.0);
    }

    #[test]
    fn complete_graph_radius() {
        for &alpha in &[0.0, 0.25, 0.5, 0.75, 0.9] {
            for n in 2..=30 {
                let r = spectral_radius(&Graph::complete(n).unwrap(), alpha).unwrap();
                assert!((r - (n as f64 - 1.0)).abs() <= 1e-10 * n as f64, "n={n} a={alpha}");
            }
        }
    }

    #[test]
    fn from_rows_checks_symmetry() {
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 3.0]]).is_ok());
        assert_eq!(
            SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.5, 3.0]]),
            Err(Error::Asymmetric(1, 0))
        );
        assert!(SymMatrix::from_rows(&[vec![1.0], vec![2.0, 3.0]]).is_err());
    }
}

//! Real roots of quadratics and cubics.
//!
//! Cubics are depressed and classified by discriminant: three real roots go
//! through the trigonometric form, a single real root through Cardano with the
//! cancellation-free choice of cube root. Every root is then Newton-polished
//! against the original coefficients.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

const NEWTON_STEPS: usize = 60;

/// Relative discriminant size below which roots are treated as coincident.
const MULTIPLE_ROOT_REL: f64 = 1e-12;

/// `c3·x³ + c2·x² + c1·x + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Cubic {
    pub c3: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

/// `c2·x² + c1·x + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Quadratic {
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl Cubic {
    pub const fn new(c3: f64, c2: f64, c1: f64, c0: f64) -> Self {
        Cubic { c3, c2, c1, c0 }
    }

    /// Monic cubic with coefficients `[x², x, 1]`.
    pub const fn monic(c2: f64, c1: f64, c0: f64) -> Self {
        Cubic::new(1.0, c2, c1, c0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0
    }

    pub fn derivative(&self) -> Quadratic {
        Quadratic::new(3.0 * self.c3, 2.0 * self.c2, self.c1)
    }

    /// Coefficients from the leading term down.
    pub fn coefficients(&self) -> [f64; 4] {
        [self.c3, self.c2, self.c1, self.c0]
    }

    /// Scale used for residual checks: `max(1, |c0|, |c1|, |c2|)` after
    /// normalising to a monic polynomial.
    pub fn residual_scale(&self) -> f64 {
        [self.c2, self.c1, self.c0]
            .iter()
            .fold(1.0f64, |m, c| m.max((c / self.c3).abs()))
    }

    /// All real roots, descending, with multiplicity when three are real.
    pub fn roots(&self) -> Result<Vec<f64>> {
        if self.c3 == 0.0 || !self.c3.is_finite() {
            return Err(Error::DegenerateLeading);
        }
        let a = self.c2 / self.c3;
        let b = self.c1 / self.c3;
        let c = self.c0 / self.c3;
        let shift = a / 3.0;
        // x = t - a/3 turns the cubic into t³ + p·t + q
        let p = b - a * a / 3.0;
        let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;

        let half_q = q / 2.0;
        let third_p = p / 3.0;
        let disc = half_q * half_q + third_p * third_p * third_p;
        let scale = half_q * half_q + third_p.abs().powi(3);

        let mut ts: Vec<f64> = if scale == 0.0 {
            vec![0.0; 3]
        } else if disc <= MULTIPLE_ROOT_REL * scale && p < 0.0 {
            let r = 2.0 * (-third_p).sqrt();
            let cos_arg = (half_q / third_p) * (-1.0 / third_p).sqrt();
            let phi = cos_arg.clamp(-1.0, 1.0).acos() / 3.0;
            (0..3)
                .map(|k| r * (phi - 2.0 * PI * k as f64 / 3.0).cos())
                .collect()
        } else if disc <= MULTIPLE_ROOT_REL * scale {
            vec![(-q).cbrt(); 3]
        } else {
            let sq = disc.sqrt();
            let u = (-half_q - sq.copysign(half_q)).cbrt();
            let t = if u == 0.0 { 0.0 } else { u - third_p / u };
            vec![t]
        };

        for t in &mut ts {
            *t = self.polish(*t - shift);
        }
        ts.sort_by(|x, y| y.total_cmp(x));
        Ok(ts)
    }

    pub fn largest_real_root(&self) -> Result<f64> {
        Ok(self.roots()?[0])
    }

    fn polish(&self, x0: f64) -> f64 {
        let d = self.derivative();
        newton(|x| self.eval(x), |x| d.eval(x), x0)
    }
}

impl Quadratic {
    pub const fn new(c2: f64, c1: f64, c0: f64) -> Self {
        Quadratic { c2, c1, c0 }
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.c2 * x + self.c1) * x + self.c0
    }

    pub fn derivative_at(&self, x: f64) -> f64 {
        2.0 * self.c2 * x + self.c1
    }

    pub fn coefficients(&self) -> [f64; 3] {
        [self.c2, self.c1, self.c0]
    }

    /// Real roots, descending; empty when the roots are complex.
    pub fn roots(&self) -> Result<Vec<f64>> {
        if self.c2 == 0.0 || !self.c2.is_finite() {
            return Err(Error::DegenerateLeading);
        }
        let b = self.c1 / self.c2;
        let c = self.c0 / self.c2;
        let disc = b * b - 4.0 * c;
        let scale = b * b + 4.0 * c.abs();
        let mut roots = if disc < -MULTIPLE_ROOT_REL * scale {
            return Ok(Vec::new());
        } else if disc <= MULTIPLE_ROOT_REL * scale {
            vec![-b / 2.0; 2]
        } else {
            let q = -0.5 * (b + disc.sqrt().copysign(b));
            if q == 0.0 {
                vec![0.0, 0.0]
            } else {
                vec![q, c / q]
            }
        };
        for r in &mut roots {
            *r = newton(|x| self.eval(x), |x| self.derivative_at(x), *r);
        }
        roots.sort_by(|x, y| y.total_cmp(x));
        Ok(roots)
    }

    pub fn largest_real_root(&self) -> Result<Option<f64>> {
        Ok(self.roots()?.first().copied())
    }
}

/// Newton iteration that only accepts steps that do not increase `|f|`.
fn newton(f: impl Fn(f64) -> f64, df: impl Fn(f64) -> f64, x0: f64) -> f64 {
    let mut x = x0;
    let mut fx = f(x);
    for _ in 0..NEWTON_STEPS {
        if fx == 0.0 {
            break;
        }
        let d = df(x);
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let next = x - fx / d;
        let f_next = f(next);
        if !(f_next.abs() < fx.abs()) {
            break;
        }
        x = next;
        fx = f_next;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn three_simple_roots() {
        let r = Cubic::monic(0.0, -1.0, 0.0).roots().unwrap();
        assert_eq!(r.len(), 3);
        assert!(close(r[0], 1.0, 1e-14) && close(r[1], 0.0, 1e-14) && close(r[2], -1.0, 1e-14));
    }

    #[test]
    fn triple_root() {
        let c = Cubic::monic(-6.0, 12.0, -8.0);
        let r = c.roots().unwrap();
        assert_eq!(r.len(), 3);
        for x in r {
            assert!(close(x, 2.0, 1e-5), "{x}");
            assert!(c.eval(x).abs() <= 1e-9 * c.residual_scale());
        }
    }

    #[test]
    fn double_root() {
        // (x - 1)² (x + 2)
        let c = Cubic::monic(0.0, -3.0, 2.0);
        let r = c.roots().unwrap();
        assert_eq!(r.len(), 3);
        assert!(close(r[0], 1.0, 1e-7) && close(r[1], 1.0, 1e-7));
        assert!(close(r[2], -2.0, 1e-12));
    }

    #[test]
    fn single_real_root() {
        // x³ + x + 1 has one real root near -0.6823278
        let c = Cubic::monic(0.0, 1.0, 1.0);
        let r = c.roots().unwrap();
        assert_eq!(r.len(), 1);
        assert!(close(r[0], -0.682_327_803_828_019_3, 1e-14));
    }

    #[test]
    fn non_monic_and_degenerate() {
        let c = Cubic::new(2.0, -2.0, -2.0, 2.0); // 2(x-1)²(x+1)
        assert!(close(c.largest_real_root().unwrap(), 1.0, 1e-7));
        assert_eq!(Cubic::new(0.0, 1.0, 1.0, 1.0).roots(), Err(Error::DegenerateLeading));
        assert_eq!(Quadratic::new(0.0, 1.0, 1.0).roots(), Err(Error::DegenerateLeading));
    }

    #[test]
    fn quadratic_cases() {
        let q = Quadratic::new(1.0, -14.0, -50.0);
        let r = q.roots().unwrap();
        assert!(close(r[0], 7.0 + 99f64.sqrt(), 1e-12));
        assert!(close(r[1], 7.0 - 99f64.sqrt(), 1e-12));
        assert!(Quadratic::new(1.0, 0.0, 1.0).roots().unwrap().is_empty());
        assert_eq!(Quadratic::new(1.0, -4.0, 4.0).roots().unwrap(), vec![2.0, 2.0]);
        assert_eq!(Quadratic::new(1.0, 0.0, 0.0).roots().unwrap(), vec![0.0, 0.0]);
    }
}

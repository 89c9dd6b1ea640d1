//! The threshold cubics `θ(n)` and `η(n)`, the order bound `f(α)`, and the
//! characteristic polynomials of the extremal-candidate quotients.

pub mod audit;
pub mod poly;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectral::check_alpha;

pub use audit::{audit_grid, audit_inequalities, audit_printed_instances, AuditGrid, AuditReport, Claim, Sign};
pub use poly::{Cubic, Quadratic};

/// Slack used when comparing an integer order with the real bound `f(α)`.
const ORDER_BOUND_SLACK: f64 = 1e-9;

/// Piecewise order bound: 14 on `[0, 1/2]`, 17 on `(1/2, 2/3]`, 20 on
/// `(2/3, 3/4]` and `5/(1-α) + 1` on `(3/4, 1)`.
pub fn f_alpha(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(if alpha <= 0.5 {
        14.0
    } else if alpha <= 2.0 / 3.0 {
        17.0
    } else if alpha <= 0.75 {
        20.0
    } else {
        5.0 / (1.0 - alpha) + 1.0
    })
}

/// Smallest integer `n` with `n >= f(α)`.
///
/// The comparison allows `1e-9` of slack so that, e.g., `α = 0.8` gives 26
/// even though `5/(1-0.8) + 1` evaluates a few ulps above 26.
pub fn min_order(alpha: f64) -> Result<usize> {
    Ok((f_alpha(alpha)? - ORDER_BOUND_SLACK).ceil() as usize)
}

pub fn in_domain(n: usize, alpha: f64) -> Result<bool> {
    Ok(n >= min_order(alpha)?)
}

/// A threshold value together with whether `(n, α)` satisfies `n >= f(α)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Threshold {
    pub value: f64,
    pub in_domain: bool,
}

/// The cubic whose largest root is `η(n)`.
pub fn eta_cubic(n: usize, alpha: f64) -> Cubic {
    let (n, a) = (n as f64, alpha);
    Cubic::monic(
        -((a + 1.0) * n + a - 4.0),
        a * n * n + (a * a - 2.0 * a - 1.0) * n - 2.0 * a + 1.0,
        -a * a * n * n + (5.0 * a * a - 3.0 * a + 2.0) * n - 10.0 * a * a + 15.0 * a - 8.0,
    )
}

/// The cubic whose largest root is `θ(n)`.
pub fn theta_cubic(n: usize, alpha: f64) -> Cubic {
    let (n, a) = (n as f64, alpha);
    Cubic::monic(
        -((a + 1.0) * n + a - 5.0),
        a * n * n + (a * a - 3.0 * a - 1.0) * n - 2.0 * a + 1.0,
        -a * a * n * n + (7.0 * a * a - 5.0 * a + 3.0) * n - 18.0 * a * a + 29.0 * a - 15.0,
    )
}

/// `η(n)`, the covered-graph threshold. Computed even when `n < f(α)`; the
/// result is then flagged out of domain.
pub fn eta(n: usize, alpha: f64) -> Result<Threshold> {
    threshold(n, alpha, eta_cubic(n, alpha))
}

/// `θ(n)`, the factor-existence threshold.
pub fn theta(n: usize, alpha: f64) -> Result<Threshold> {
    threshold(n, alpha, theta_cubic(n, alpha))
}

fn threshold(n: usize, alpha: f64, cubic: Cubic) -> Result<Threshold> {
    let in_domain = in_domain(n, alpha)?;
    Ok(Threshold {
        value: cubic.largest_real_root()?,
        in_domain,
    })
}

/// The five quotient shapes: `B0` is the factor-free graph
/// `K_1 ∨ (K_{n-4} ∪ 3K_1)`, `B1`–`B4` are `K_s ∨ (K_{n_1} ∪ tK_1)` with
/// `(n_1, t)` equal to `(n-3s, 2s)`, `(n-3s+1, 2s-1)`, `(0, 2s-1)`, `(0, 2s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseId {
    B0,
    B1,
    B2,
    B3,
    B4,
}

impl CaseId {
    pub const ALL: [CaseId; 5] = [CaseId::B0, CaseId::B1, CaseId::B2, CaseId::B3, CaseId::B4];

    /// Checks `(n, s)` against the case's admissible range.
    pub fn check(self, n: usize, s: usize) -> Result<()> {
        let ok = match self {
            CaseId::B0 => n >= 6,
            CaseId::B1 => s >= 1 && n >= 3 * s + 2,
            CaseId::B2 => s >= 2 && n >= 3 * s + 1,
            CaseId::B3 => s >= 2 && n + 1 == 3 * s,
            CaseId::B4 => s >= 2 && n == 3 * s,
        };
        if ok {
            Ok(())
        } else {
            let rule = match self {
                CaseId::B0 => "n >= 6",
                CaseId::B1 => "s >= 1 and n >= 3s + 2",
                CaseId::B2 => "s >= 2 and n >= 3s + 1",
                CaseId::B3 => "s >= 2 and n = 3s - 1",
                CaseId::B4 => "s >= 2 and n = 3s",
            };
            Err(Error::FamilyRange {
                family: self.to_string(),
                detail: format!("n = {n}, s = {s} violates {rule}"),
            })
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CaseId::B0 => "B0",
            CaseId::B1 => "B1",
            CaseId::B2 => "B2",
            CaseId::B3 => "B3",
            CaseId::B4 => "B4",
        };
        f.write_str(name)
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "B0" => Ok(CaseId::B0),
            "B1" => Ok(CaseId::B1),
            "B2" => Ok(CaseId::B2),
            "B3" => Ok(CaseId::B3),
            "B4" => Ok(CaseId::B4),
            _ => Err(Error::Config(format!("unknown case {s:?}"))),
        }
    }
}

/// A characteristic polynomial of degree 2 or 3.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum CharPoly {
    Quadratic(Quadratic),
    Cubic(Cubic),
}

impl CharPoly {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            CharPoly::Quadratic(q) => q.eval(x),
            CharPoly::Cubic(c) => c.eval(x),
        }
    }

    /// Coefficients from the leading term down.
    pub fn coefficients(&self) -> Vec<f64> {
        match self {
            CharPoly::Quadratic(q) => q.coefficients().to_vec(),
            CharPoly::Cubic(c) => c.coefficients().to_vec(),
        }
    }

    /// Real roots, descending.
    pub fn roots(&self) -> Result<Vec<f64>> {
        match self {
            CharPoly::Quadratic(q) => q.roots(),
            CharPoly::Cubic(c) => c.roots(),
        }
    }

    pub fn largest_real_root(&self) -> Result<f64> {
        self.roots()?
            .first()
            .copied()
            .ok_or(Error::NonConvergence("real root of a quadratic with complex roots"))
    }
}

/// `φ_1`, the characteristic polynomial of the `B1` quotient.
pub fn phi1(n: usize, s: usize, alpha: f64) -> Cubic {
    let (n, s, a) = (n as f64, s as f64, alpha);
    Cubic::monic(
        -((a + 1.0) * n + (a - 2.0) * s - 2.0),
        a * n * n + (a * a - a) * s * n - (a + 1.0) * n - 2.0 * s * s - (2.0 * a - 2.0) * s + 1.0,
        -a * a * s * n * n + (4.0 * a * a - 4.0 * a + 2.0) * s * s * n + (a * a + a) * s * n
            - (8.0 * a * a - 14.0 * a + 6.0) * s.powi(3)
            - (2.0 * a * a - 2.0 * a + 2.0) * s * s
            - a * s,
    )
}

/// `φ_2`, the characteristic polynomial of the `B2` quotient.
pub fn phi2(n: usize, s: usize, alpha: f64) -> Cubic {
    let (n, s, a) = (n as f64, s as f64, alpha);
    Cubic::monic(
        -((a + 1.0) * n + (a - 2.0) * s - 1.0),
        a * n * n + (a * a - a) * s * n - n - 2.0 * s * s - (2.0 * a - 3.0) * s,
        -a * a * s * n * n + (4.0 * a * a - 4.0 * a + 2.0) * s * s * n
            - (a * a - 3.0 * a + 1.0) * s * n
            - (8.0 * a * a - 14.0 * a + 6.0) * s.powi(3)
            + (4.0 * a * a - 9.0 * a + 3.0) * s * s,
    )
}

/// `φ_3`, the characteristic polynomial of the `B3` quotient.
pub fn phi3(s: usize, alpha: f64) -> Quadratic {
    let (s, a) = (s as f64, alpha);
    Quadratic::new(
        1.0,
        -(3.0 * a * s + s - a - 1.0),
        5.0 * a * s * s - 2.0 * s * s - 3.0 * a * s + s,
    )
}

/// `φ_4`, the characteristic polynomial of the `B4` quotient.
pub fn phi4(s: usize, alpha: f64) -> Quadratic {
    let (s, a) = (s as f64, alpha);
    Quadratic::new(1.0, -(3.0 * a * s + s - 1.0), 5.0 * a * s * s - 2.0 * s * s - a * s)
}

/// The closed-form characteristic polynomial of a case quotient. `s` is
/// ignored for `B0`, whose polynomial is the `θ` cubic.
pub fn case_char_poly(case: CaseId, n: usize, s: usize, alpha: f64) -> Result<CharPoly> {
    check_alpha(alpha)?;
    case.check(n, s)?;
    Ok(match case {
        CaseId::B0 => CharPoly::Cubic(theta_cubic(n, alpha)),
        CaseId::B1 => CharPoly::Cubic(phi1(n, s, alpha)),
        CaseId::B2 => CharPoly::Cubic(phi2(n, s, alpha)),
        CaseId::B3 => CharPoly::Quadratic(phi3(s, alpha)),
        CaseId::B4 => CharPoly::Quadratic(phi4(s, alpha)),
    })
}

/// Second-largest root of the `B1` or `B2` cubic against its interlacing
/// bound (`n - 3` for `B1`, `n - 4` for `B2`).
pub fn second_eig_bound(case: CaseId, n: usize, s: usize, alpha: f64) -> Result<AuditReport> {
    let (claim, bound) = match case {
        CaseId::B1 => (Claim::B1SecondRootBelowNMinus3, n as f64 - 3.0),
        CaseId::B2 => (Claim::B2SecondRootBelowNMinus4, n as f64 - 4.0),
        other => {
            return Err(Error::FamilyRange {
                family: other.to_string(),
                detail: "second-root bound is defined for B1 and B2 only".into(),
            })
        }
    };
    let roots = case_char_poly(case, n, s, alpha)?.roots()?;
    if roots.len() < 2 {
        return Err(Error::NonConvergence("three real roots expected for a case cubic"));
    }
    Ok(AuditReport::new(claim, n, Some(s), alpha, bound - roots[1], Sign::Positive))
}

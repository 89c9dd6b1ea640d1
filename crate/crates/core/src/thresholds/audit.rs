//! Numeric audit of the sign claims behind the covered-graph threshold.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::{eta, eta_cubic, min_order, second_eig_bound, theta, CaseId};
use crate::error::Result;
use crate::spectral::check_alpha;
use crate::tolerance::Tolerances;

/// Asserted sign of an audited quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    /// `value > slack`
    Positive,
    /// `value >= -slack`
    NonNegative,
    /// `value < -slack`
    Negative,
}

impl Sign {
    pub fn holds(self, value: f64, slack: f64) -> bool {
        match self {
            Sign::Positive => value > slack,
            Sign::NonNegative => value >= -slack,
            Sign::Negative => value < -slack,
        }
    }
}

/// Audited claims. The derived order is the report sort order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Claim {
    /// `θ - (n - 4) > 0`
    ThetaAboveNMinus4,
    /// `η - (n - 3) > 0`
    EtaAboveNMinus3,
    /// `η - θ > 0`
    ThetaBelowEta,
    /// `φ(θ) < 0`
    EtaCubicAtThetaNegative,
    /// `l_1(s, n) > 0` for `2 <= s <= (n-2)/3`, `α <= 3/4`
    L1Positive,
    /// `l_2(s, n) >= 0` for `2 <= s <= (n-1)/3`, `α <= 3/4`
    L2NonNegative,
    /// `Φ_1(s, n) > 0` for `2 <= s <= (n-2)/3`, `α > 3/4`
    BigPhi1Positive,
    /// `Φ_2(s, n) > 0` for `2 <= s <= (n-1)/3`, `α > 3/4`
    BigPhi2Positive,
    /// `φ_3(n-3) > 0` with `n = 3s - 1`, `s >= 5`
    Phi3AtNMinus3Positive,
    /// `φ_3'(n-3) > 0` with `n = 3s - 1`, `s >= 5`
    Phi3DerivAtNMinus3Positive,
    /// `φ_4(n-3) > 0` with `n = 3s`, `s >= 5`
    Phi4AtNMinus3Positive,
    /// `φ_4'(n-3) > 0` with `n = 3s`, `s >= 5`
    Phi4DerivAtNMinus3Positive,
    /// `(n - 3) - η_2 > 0` for the `B1` cubic
    B1SecondRootBelowNMinus3,
    /// `(n - 4) - β_2 > 0` for the `B2` cubic
    B2SecondRootBelowNMinus4,
    /// `78α² - 328α + 234 > 0`
    PrintedL1At2And14,
    /// `84α² - 318α + 202 > 0`
    PrintedL1At3And14,
    /// `46α² - 180α + 115 > 0`
    PrintedL2At2And14,
    /// `138α² - 494α + 308 > 0`
    PrintedL2At3And14,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One evaluated sign claim.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub claim: Claim,
    pub n: usize,
    pub s: Option<usize>,
    pub alpha: f64,
    pub value: f64,
    pub sign: Sign,
    pub pass: bool,
}

impl AuditReport {
    pub fn new(claim: Claim, n: usize, s: Option<usize>, alpha: f64, value: f64, sign: Sign) -> Self {
        AuditReport::with_slack(claim, n, s, alpha, value, sign, Tolerances::DEFAULT.audit_slack)
    }

    pub fn with_slack(
        claim: Claim,
        n: usize,
        s: Option<usize>,
        alpha: f64,
        value: f64,
        sign: Sign,
        slack: f64,
    ) -> Self {
        AuditReport {
            claim,
            n,
            s,
            alpha,
            value,
            sign,
            pass: sign.holds(value, slack),
        }
    }

    fn sort_key_cmp(&self, other: &Self) -> Ordering {
        self.claim
            .cmp(&other.claim)
            .then(self.n.cmp(&other.n))
            .then(self.s.cmp(&other.s))
            .then(self.alpha.total_cmp(&other.alpha))
    }
}

/// Sorts by `(claim, n, s, α)`.
pub fn sort_reports(reports: &mut [AuditReport]) {
    reports.sort_by(AuditReport::sort_key_cmp);
}

/// `g_1(η)`, where `φ_1 - φ = (s - 1)·g_1`.
pub fn g1(eta: f64, n: usize, s: usize, alpha: f64) -> f64 {
    let (n, s, a) = (n as f64, s as f64, alpha);
    (2.0 - a) * eta * eta - ((a - a * a) * n + 2.0 * s + 2.0 * a) * eta - a * a * n * n
        + (4.0 * a * a - 4.0 * a + 2.0) * s * n
        + (5.0 * a * a - 3.0 * a + 2.0) * n
        - (8.0 * a * a - 14.0 * a + 6.0) * s * s
        - (10.0 * a * a - 16.0 * a + 8.0) * s
        - 10.0 * a * a
        + 15.0 * a
        - 8.0
}

/// `l_1(s, n) = g_1(n - 3)`.
pub fn l1(s: usize, n: usize, alpha: f64) -> f64 {
    let (n, s, a) = (n as f64, s as f64, alpha);
    (2.0 - 2.0 * a) * n * n + ((4.0 * a * a - 4.0 * a) * s + 2.0 * a * a + 4.0 * a - 10.0) * n
        - (8.0 * a * a - 14.0 * a + 6.0) * s * s
        - (10.0 * a * a - 16.0 * a + 2.0) * s
        - 10.0 * a * a
        + 12.0 * a
        + 10.0
}

/// `l_2(s, n) = (φ_2 - φ)(n - 3)`.
pub fn l2(s: usize, n: usize, alpha: f64) -> f64 {
    let (n, s, a) = (n as f64, s as f64, alpha);
    ((2.0 - 2.0 * a) * s + 3.0 * a - 3.0) * n * n
        + ((4.0 * a * a - 4.0 * a) * s * s - (4.0 * a * a - 10.0 * a + 10.0) * s - 2.0 * a * a - 7.0 * a
            + 15.0)
            * n
        - (8.0 * a * a - 14.0 * a + 6.0) * s.powi(3)
        + (4.0 * a * a - 9.0 * a + 9.0) * s * s
        - 3.0 * (a - 3.0) * s
        + 10.0 * a * a
        - 12.0 * a
        - 16.0
}

/// `Φ_1(s, n) = φ_1(n - 3)`.
pub fn big_phi1(s: usize, n: usize, alpha: f64) -> f64 {
    let (n, s, a) = (n as f64, s as f64, alpha);
    2.0 * (1.0 - a) * (4.0 * a - 3.0) * s.powi(3)
        + ((4.0 * a * a - 4.0 * a) * n - 2.0 * a * a + 2.0 * a + 4.0) * s * s
        + ((2.0 - 2.0 * a) * n * n - (2.0 * a * a - 8.0 * a + 10.0) * n - 4.0 * a + 12.0) * s
        + (2.0 * a - 2.0) * n * n
        - (6.0 * a - 10.0) * n
        - 12.0
}

/// `Φ_2(s, n) = φ_2(n - 3)`.
pub fn big_phi2(s: usize, n: usize, alpha: f64) -> f64 {
    let (n, s, a) = (n as f64, s as f64, alpha);
    2.0 * (1.0 - a) * (4.0 * a - 3.0) * s.powi(3)
        + ((4.0 * a * a - 4.0 * a) * n + 4.0 * a * a - 9.0 * a + 9.0) * s * s
        + ((2.0 - 2.0 * a) * n * n - (4.0 * a * a - 10.0 * a + 10.0) * n - 3.0 * a + 9.0) * s
        + (3.0 * a - 3.0) * n * n
        - (9.0 * a - 15.0) * n
        - 18.0
}

/// `φ_3(3s - 4)` in closed form.
pub fn phi3_at_n_minus_3(s: usize, alpha: f64) -> f64 {
    let (s, a) = (s as f64, alpha);
    (4.0 - 4.0 * a) * s * s + (12.0 * a - 16.0) * s - 4.0 * a + 12.0
}

/// `φ_3'(3s - 4)` in closed form.
pub fn phi3_deriv_at_n_minus_3(s: usize, alpha: f64) -> f64 {
    (5.0 - 3.0 * alpha) * s as f64 + alpha - 7.0
}

/// `φ_4(3s - 3)` in closed form.
pub fn phi4_at_n_minus_3(s: usize, alpha: f64) -> f64 {
    let (s, a) = (s as f64, alpha);
    (4.0 - 4.0 * a) * s * s + (8.0 * a - 12.0) * s + 6.0
}

/// `φ_4'(3s - 3)` in closed form.
pub fn phi4_deriv_at_n_minus_3(s: usize, alpha: f64) -> f64 {
    (5.0 - 3.0 * alpha) * s as f64 - 5.0
}

/// Every sign claim that applies at `(n, α)`, sorted by `(claim, n, s, α)`.
///
/// Claims are evaluated even when `n < f(α)`; callers that only want the
/// domain `n >= f(α)` should filter with [`super::in_domain`].
pub fn audit_inequalities(n: usize, alpha: f64) -> Result<Vec<AuditReport>> {
    check_alpha(alpha)?;
    let mut out = Vec::new();
    let nf = n as f64;

    if n >= 6 {
        let th = theta(n, alpha)?.value;
        let et = eta(n, alpha)?.value;
        out.push(AuditReport::new(Claim::ThetaAboveNMinus4, n, None, alpha, th - (nf - 4.0), Sign::Positive));
        out.push(AuditReport::new(Claim::EtaAboveNMinus3, n, None, alpha, et - (nf - 3.0), Sign::Positive));
        out.push(AuditReport::new(Claim::ThetaBelowEta, n, None, alpha, et - th, Sign::Positive));
        out.push(AuditReport::new(
            Claim::EtaCubicAtThetaNegative,
            n,
            None,
            alpha,
            eta_cubic(n, alpha).eval(th),
            Sign::Negative,
        ));
    }

    let upto = |off: usize| if n >= off { (n - off) / 3 } else { 0 };
    let low_alpha = alpha <= 0.75;
    for s in 2..=upto(2) {
        out.push(if low_alpha {
            AuditReport::new(Claim::L1Positive, n, Some(s), alpha, l1(s, n, alpha), Sign::Positive)
        } else {
            AuditReport::new(Claim::BigPhi1Positive, n, Some(s), alpha, big_phi1(s, n, alpha), Sign::Positive)
        });
    }
    for s in 2..=upto(1) {
        out.push(if low_alpha {
            AuditReport::new(Claim::L2NonNegative, n, Some(s), alpha, l2(s, n, alpha), Sign::NonNegative)
        } else {
            AuditReport::new(Claim::BigPhi2Positive, n, Some(s), alpha, big_phi2(s, n, alpha), Sign::Positive)
        });
    }

    if n % 3 == 2 && (n + 1) / 3 >= 5 {
        let s = (n + 1) / 3;
        out.push(AuditReport::new(
            Claim::Phi3AtNMinus3Positive,
            n,
            Some(s),
            alpha,
            phi3_at_n_minus_3(s, alpha),
            Sign::Positive,
        ));
        out.push(AuditReport::new(
            Claim::Phi3DerivAtNMinus3Positive,
            n,
            Some(s),
            alpha,
            phi3_deriv_at_n_minus_3(s, alpha),
            Sign::Positive,
        ));
    }
    if n.is_multiple_of(3) && n / 3 >= 5 {
        let s = n / 3;
        out.push(AuditReport::new(
            Claim::Phi4AtNMinus3Positive,
            n,
            Some(s),
            alpha,
            phi4_at_n_minus_3(s, alpha),
            Sign::Positive,
        ));
        out.push(AuditReport::new(
            Claim::Phi4DerivAtNMinus3Positive,
            n,
            Some(s),
            alpha,
            phi4_deriv_at_n_minus_3(s, alpha),
            Sign::Positive,
        ));
    }

    for s in 1..=upto(2) {
        out.push(second_eig_bound(CaseId::B1, n, s, alpha)?);
    }
    for s in 2..=upto(1) {
        out.push(second_eig_bound(CaseId::B2, n, s, alpha)?);
    }

    sort_reports(&mut out);
    Ok(out)
}

/// The four closed-form instances at `n = 14`, evaluated as printed.
pub fn audit_printed_instances(alpha: f64) -> Result<Vec<AuditReport>> {
    check_alpha(alpha)?;
    let a = alpha;
    let forms = [
        (Claim::PrintedL1At2And14, 2, 78.0 * a * a - 328.0 * a + 234.0),
        (Claim::PrintedL1At3And14, 3, 84.0 * a * a - 318.0 * a + 202.0),
        (Claim::PrintedL2At2And14, 2, 46.0 * a * a - 180.0 * a + 115.0),
        (Claim::PrintedL2At3And14, 3, 138.0 * a * a - 494.0 * a + 308.0),
    ];
    Ok(forms
        .into_iter()
        .map(|(claim, s, v)| AuditReport::new(claim, 14, Some(s), alpha, v, Sign::Positive))
        .collect())
}

/// Parameter grid for [`audit_grid`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditGrid {
    pub alphas: Vec<f64>,
    /// Largest order audited; the smallest is `⌈f(α)⌉` unless `n_min` is set.
    pub n_max: usize,
    pub n_min: Option<usize>,
    /// Sample count for the printed instances on `[0, 3/4]`.
    pub printed_samples: usize,
}

impl Default for AuditGrid {
    fn default() -> Self {
        let mut alphas: Vec<f64> = (0..10).map(|k| k as f64 / 10.0).collect();
        alphas.push(2.0 / 3.0);
        alphas.push(0.75);
        alphas.sort_by(f64::total_cmp);
        alphas.dedup();
        AuditGrid {
            alphas,
            n_max: 30,
            n_min: None,
            printed_samples: 76,
        }
    }
}

/// Runs [`audit_inequalities`] over the grid (orders from `⌈f(α)⌉`, or
/// `n_min` when set, up to `n_max`) plus the printed instances.
pub fn audit_grid(grid: &AuditGrid) -> Result<Vec<AuditReport>> {
    let mut out = Vec::new();
    for &alpha in &grid.alphas {
        let lo = grid.n_min.unwrap_or(min_order(alpha)?);
        for n in lo..=grid.n_max {
            out.extend(audit_inequalities(n, alpha)?);
        }
    }
    if grid.printed_samples > 0 {
        let steps = grid.printed_samples.max(2) - 1;
        for k in 0..=steps {
            out.extend(audit_printed_instances(0.75 * k as f64 / steps as f64)?);
        }
    }
    sort_reports(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{phi1, phi2, phi3, phi4};
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-8 * a.abs().max(b.abs()).max(1.0)
    }

    const ALPHAS: [f64; 6] = [0.0, 0.2, 0.5, 2.0 / 3.0, 0.75, 0.85];

    #[test]
    fn g1_factor_identity() {
        for &a in &ALPHAS {
            for s in 1..6 {
                for n in (3 * s + 2)..30 {
                    for &x in &[-3.0, 0.5, 7.25, n as f64] {
                        let lhs = phi1(n, s, a).eval(x) - eta_cubic(n, a).eval(x);
                        assert!(close(lhs, (s as f64 - 1.0) * g1(x, n, s, a)), "n={n} s={s} a={a}");
                    }
                }
            }
        }
    }

    #[test]
    fn substitution_identities() {
        for &a in &ALPHAS {
            for s in 1..8 {
                for n in 6..32 {
                    let x = n as f64 - 3.0;
                    assert!(close(l1(s, n, a), g1(x, n, s, a)));
                    let d2 = phi2(n, s, a).eval(x) - eta_cubic(n, a).eval(x);
                    assert!(close(l2(s, n, a), d2));
                    assert!(close(big_phi1(s, n, a), phi1(n, s, a).eval(x)));
                    assert!(close(big_phi2(s, n, a), phi2(n, s, a).eval(x)));
                }
                let n3 = 3 * s - 1;
                let x = n3 as f64 - 3.0;
                let p3 = phi3(s, a);
                assert!(close(phi3_at_n_minus_3(s, a), p3.eval(x)));
                assert!(close(phi3_deriv_at_n_minus_3(s, a), p3.derivative_at(x)));
                let x = 3.0 * s as f64 - 3.0;
                let p4 = phi4(s, a);
                assert!(close(phi4_at_n_minus_3(s, a), p4.eval(x)));
                assert!(close(phi4_deriv_at_n_minus_3(s, a), p4.derivative_at(x)));
            }
        }
    }

    #[test]
    fn l_values_at_order_14() {
        // closed forms obtained by expanding l_1, l_2 at n = 14
        for k in 0..=75 {
            let a = k as f64 / 100.0;
            assert!(close(l1(2, 14, a), 78.0 * a * a - 348.0 * a + 234.0));
            assert!(close(l1(3, 14, a), 84.0 * a * a - 318.0 * a + 202.0));
            assert!(close(l2(2, 14, a), 46.0 * a * a - 180.0 * a + 116.0));
            assert!(close(l2(3, 14, a), 138.0 * a * a - 494.0 * a + 308.0));
        }
    }

    #[test]
    fn eta_cubic_negative_at_theta_for_14_0() {
        let th = theta(14, 0.0).unwrap().value;
        assert!(eta_cubic(14, 0.0).eval(th) < 0.0);
    }

    #[test]
    fn claim_selection() {
        let r = audit_inequalities(14, 0.0).unwrap();
        let count = |c| r.iter().filter(|x| x.claim == c).count();
        assert_eq!(count(Claim::L1Positive), 3); // s = 2, 3, 4
        assert_eq!(count(Claim::L2NonNegative), 3); // s = 2, 3, 4
        assert_eq!(count(Claim::BigPhi1Positive), 0);
        assert_eq!(count(Claim::Phi3AtNMinus3Positive), 1); // 14 = 3·5 - 1
        assert_eq!(count(Claim::Phi4AtNMinus3Positive), 0);
        assert_eq!(count(Claim::B1SecondRootBelowNMinus3), 4);
        assert!(r.iter().all(|x| x.pass), "{r:#?}");

        let r = audit_inequalities(27, 0.8).unwrap();
        assert!(r.iter().any(|x| x.claim == Claim::BigPhi2Positive));
        assert!(r.iter().any(|x| x.claim == Claim::Phi4AtNMinus3Positive));
        assert!(!r.iter().any(|x| x.claim == Claim::L1Positive));
    }

    #[test]
    fn sign_slack() {
        assert!(!Sign::Positive.holds(1e-10, 1e-9));
        assert!(Sign::NonNegative.holds(-1e-10, 1e-9));
        assert!(!Sign::NonNegative.holds(-1e-8, 1e-9));
        assert!(Sign::Negative.holds(-1.0, 1e-9));
    }

    #[test]
    fn sorted_output() {
        let r = audit_grid(&AuditGrid {
            alphas: vec![0.5, 0.0],
            n_max: 16,
            n_min: None,
            printed_samples: 3,
        })
        .unwrap();
        assert!(r.windows(2).all(|w| w[0].sort_key_cmp(&w[1]) != Ordering::Greater));
        assert_eq!(r.iter().filter(|x| x.claim == Claim::PrintedL1At2And14).count(), 3);
    }
}

use serde::Serialize;

/// Every numeric threshold used by the solvers, audits and campaigns.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Jacobi stops once the off-diagonal Frobenius norm is at most this
    /// fraction of the full Frobenius norm.
    pub jacobi_rel: f64,
    pub jacobi_max_sweeps: usize,
    /// Power iteration, used only for quotients that cannot be symmetrised.
    pub power_tol: f64,
    pub power_max_iter: usize,
    /// Residual bound for polished polynomial roots, relative to
    /// `max(1, |c0|, |c1|, |c2|)`.
    pub root_residual_rel: f64,
    /// Slack for sign claims: `> 0` means `> slack`, `>= 0` means `>= -slack`.
    pub audit_slack: f64,
    /// Dead zone around the threshold: records within this of `eta` are
    /// neither above nor below it.
    pub tie_margin: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        jacobi_rel: 1e-12,
        jacobi_max_sweeps: 100,
        power_tol: 1e-12,
        power_max_iter: 100_000,
        root_residual_rel: 1e-9,
        audit_slack: 1e-9,
        tie_margin: 1e-7,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances::DEFAULT
    }
}

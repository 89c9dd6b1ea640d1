//! The extremal graph K_{n-3} v K_1 v 2K_1 reaches eta(n) and is not covered.
//!
//! cargo run --release --example sharpness

use specfac::factor::{self, Limits};
use specfac::{families, spectral, thresholds};

fn main() -> specfac::Result<()> {
    let limits = Limits {
        subset_scan: 30,
        ..Limits::DEFAULT
    };
    for alpha in [0.0, 0.5, 0.75] {
        for n in [14, 20, 26] {
            if !thresholds::in_domain(n, alpha)? {
                continue;
            }
            let inst = families::extremal_graph(n)?;
            let rho = spectral::spectral_radius(&inst.graph, alpha)?;
            let eta = thresholds::eta(n, alpha)?.value;
            let verdict = factor::is_covered_structural_with(&inst.graph, &limits)?;
            println!(
                "n={n:>2} alpha={alpha:<4} rho={rho:.10} eta={eta:.10} diff={:+.1e} {}",
                rho - eta,
                verdict.violation().map(|v| v.to_string()).unwrap_or_else(|| "covered".into())
            );
        }
    }
    Ok(())
}

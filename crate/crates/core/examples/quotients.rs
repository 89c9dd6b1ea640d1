//! Equitable quotient matrices of the case graphs and their characteristic
//! polynomials.
//!
//! cargo run --example quotients

use specfac::thresholds::{self, CaseId};
use specfac::{families, spectral};

fn main() -> specfac::Result<()> {
    let alpha = 0.5;
    for (case, n, s) in [
        (CaseId::B1, 14, 2),
        (CaseId::B2, 14, 3),
        (CaseId::B3, 14, 5),
        (CaseId::B4, 15, 5),
    ] {
        let inst = families::case_graph(case, n, s)?;
        let q = spectral::quotient(&inst.graph, alpha, &inst.partition)?;
        println!("{case} n={n} s={s} blocks={:?} equitable={}", inst.partition.sizes(), q.is_equitable());
        for row in q.rows() {
            println!("    {row:?}");
        }
        println!("  char poly (assembled) {:?}", q.char_poly());
        println!(
            "  char poly (closed)    {:?}",
            thresholds::case_char_poly(case, n, s, alpha)?.coefficients()
        );
        println!(
            "  largest eigenvalue {:.10}, full rho {:.10}, eta {:.10}",
            q.largest_eigenvalue()?,
            spectral::spectral_radius(&inst.graph, alpha)?,
            thresholds::eta(n, alpha)?.value
        );
    }
    Ok(())
}

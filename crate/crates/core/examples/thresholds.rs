//! eta(n) and theta(n) for a range of orders and alphas.
//!
//! cargo run --example thresholds

use specfac::thresholds;

fn main() -> specfac::Result<()> {
    for alpha in [0.0, 0.5, 0.75, 0.8] {
        let lo = thresholds::min_order(alpha)?;
        println!("alpha = {alpha}: n >= {lo}");
        for n in [14, 20, 26, 40] {
            let eta = thresholds::eta(n, alpha)?;
            let theta = thresholds::theta(n, alpha)?;
            let mark = if eta.in_domain { "" } else { "  (out of domain)" };
            println!(
                "  n = {n:>2}  theta = {:>9.5}  eta = {:>9.5}  eta - (n-3) = {:.5}{mark}",
                theta.value,
                eta.value,
                eta.value - (n as f64 - 3.0)
            );
        }
    }
    Ok(())
}

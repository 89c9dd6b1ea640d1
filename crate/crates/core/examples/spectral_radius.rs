//! A_alpha spectral radius of a few small graphs across alpha.
//!
//! cargo run --example spectral_radius

use specfac::spectral;
use specfac::Graph;

fn main() -> specfac::Result<()> {
    let graphs = [
        ("K5", Graph::complete(5)?),
        ("P6", Graph::path(6)?),
        ("K1,4", Graph::star(4)?),
    ];
    println!("{:<6} {:>8} {:>8} {:>8} {:>8}", "graph", "0", "0.25", "0.5", "0.9");
    for (name, g) in &graphs {
        let row: Vec<String> = [0.0, 0.25, 0.5, 0.9]
            .iter()
            .map(|&a| spectral::spectral_radius(g, a).map(|r| format!("{r:>8.4}")))
            .collect::<specfac::Result<_>>()?;
        println!("{name:<6} {}", row.join(" "));
    }

    // the full spectrum comes from the same matrix
    let m = spectral::a_alpha(&Graph::star(4)?, 0.5)?;
    println!("spectrum of A_0.5(K1,4): {:?}", m.eigenvalues());
    Ok(())
}

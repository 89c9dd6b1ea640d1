//! Runs the inequality audit on a small grid and prints a per-claim tally.
//!
//! cargo run --example audit

use std::collections::BTreeMap;

use specfac::thresholds::{audit_grid, AuditGrid};

fn main() -> specfac::Result<()> {
    let grid = AuditGrid {
        n_max: 24,
        ..AuditGrid::default()
    };
    let reports = audit_grid(&grid)?;
    let mut tally: BTreeMap<_, (usize, usize)> = BTreeMap::new();
    for r in &reports {
        let e = tally.entry(r.claim).or_default();
        e.0 += 1;
        e.1 += r.pass as usize;
    }
    for (claim, (total, pass)) in tally {
        println!("{:<32} {pass:>5}/{total}", claim.to_string());
    }
    Ok(())
}

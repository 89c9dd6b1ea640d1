//! A small seeded random campaign, written as CSV to stdout.
//!
//! cargo run --release --example random_campaign

use specfac::harness::{self, report, CampaignConfig, Format, Mode};

fn main() -> specfac::Result<()> {
    let cfg = CampaignConfig {
        mode: Mode::Random,
        n_min: 14,
        n_max: 14,
        alphas: vec![0.0, 0.5],
        p: vec![0.8],
        trials: 25,
        seed: 42,
        format: Format::Csv,
        ..CampaignConfig::default()
    };
    let result = harness::run(&cfg)?;
    print!("{}", report::to_csv(&result)?);
    let s = &result.summary;
    eprintln!(
        "{} graphs, {} above eta, {} counterexamples",
        s.graphs, s.above, s.counterexamples
    );
    Ok(())
}

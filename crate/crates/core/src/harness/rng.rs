//! Reproducible random graphs.
//!
//! The generator is SplitMix64 with its state set to the seed. A campaign
//! draws one 64-bit trial seed per trial from a master SplitMix64, in trial
//! order. Each trial then seeds its own SplitMix64 and draws `G(n, p)`: for
//! pairs `(i, j)`, `i < j`, in row-major order, the pair is an edge when
//! `(next_u64 >> 11) * 2^-53 < p`. Disconnected draws are discarded and the
//! next draw continues from the same stream.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Give up on connectivity after this many draws.
pub const MAX_CONNECT_ATTEMPTS: usize = 100_000;

pub fn splitmix(seed: u64) -> SplitMix64 {
    SplitMix64::from_seed(seed.to_le_bytes())
}

/// Uniform in `[0, 1)` with 53 random bits.
pub fn uniform01(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// The first `count` outputs of SplitMix64 seeded with `master`.
pub fn trial_seeds(master: u64, count: usize) -> Vec<u64> {
    let mut rng = splitmix(master);
    (0..count).map(|_| rng.next_u64()).collect()
}

/// One `G(n, p)` draw.
pub fn gnp(n: usize, p: f64, rng: &mut impl RngCore) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Config(format!("edge probability {p} is outside [0, 1]")));
    }
    let mut adj = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            if uniform01(rng) < p {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Graph::from_adjacency(adj)
}

/// `G(n, p)` conditioned on connectivity by rejection.
pub fn connected_gnp(n: usize, p: f64, rng: &mut impl RngCore) -> Result<Graph> {
    for _ in 0..MAX_CONNECT_ATTEMPTS {
        let g = gnp(n, p, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::NonConvergence("connected G(n, p) rejection sampling"))
}

/// The connected sample for one trial seed.
pub fn trial_graph(n: usize, p: f64, trial_seed: u64) -> Result<Graph> {
    connected_gnp(n, p, &mut splitmix(trial_seed))
}

//! A_α-spectral radii of graphs and `P≥2`-factor covered graphs.
//!
//! The crate computes spectra of `A_α(G) = α·D(G) + (1-α)·A(G)`, decides
//! path-factor existence and coverage both by subset criteria and by direct
//! search, evaluates the cubic thresholds `θ(n)` and `η(n)`, and builds the
//! graph families that make the threshold sharp. The `harness` module runs
//! verification campaigns and writes JSON or CSV reports.
//!
//! Each capability has a runnable example under `examples/`.

pub mod enumerate;
pub mod error;
pub mod factor;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod spectral;
pub mod thresholds;
pub mod tolerance;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use tolerance::Tolerances;

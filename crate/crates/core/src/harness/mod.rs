//! Verification campaigns, reports, and the command-line front end.

pub mod campaign;
pub mod cli;
pub mod report;
pub mod rng;

pub use campaign::{
    run, Bucket, CampaignConfig, CampaignResult, Format, Mode, SharpnessRow, Status, Summary, VerificationRecord,
};

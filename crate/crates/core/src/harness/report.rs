//! JSON and CSV report emission.
//!
//! JSON reports carry `schema: 1` and keep the only non-reproducible field,
//! the wall-clock timestamp, in `header`.

use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use super::campaign::{AuditSection, CampaignConfig, CampaignResult, Format, Summary, VerificationRecord};
use crate::error::{Error, Result};

pub const SCHEMA: u32 = 1;

/// Fixed CSV column order for verification records.
pub const RECORD_COLUMNS: [&str; 21] = [
    "index",
    "graph6",
    "n",
    "alpha",
    "p",
    "family",
    "s",
    "rho",
    "eta",
    "in_domain",
    "bucket",
    "above_threshold",
    "has_factor",
    "covered",
    "direct_covered",
    "violation_kind",
    "violation_s",
    "violation_isolated",
    "violation_bound",
    "status",
    "elapsed_us",
];

/// Fixed CSV column order for audit output.
pub const AUDIT_COLUMNS: [&str; 8] = ["section", "claim", "n", "s", "alpha", "value", "sign", "pass"];

#[derive(Serialize)]
struct Header {
    tool: &'static str,
    version: &'static str,
    timestamp: u64,
}

#[derive(Serialize)]
struct Report<'a> {
    schema: u32,
    header: Header,
    config: &'a CampaignConfig,
    summary: &'a Summary,
    records: &'a [VerificationRecord],
    #[serde(skip_serializing_if = "Option::is_none")]
    audit: Option<&'a AuditSection>,
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Config(format!("I/O: {e}"))
}

pub fn unix_now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Pretty JSON with the given header timestamp.
pub fn to_json(result: &CampaignResult, timestamp: u64) -> Result<String> {
    let report = Report {
        schema: SCHEMA,
        header: Header {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            timestamp,
        },
        config: &result.config,
        summary: &result.summary,
        records: &result.records,
        audit: result.audit.as_ref(),
    };
    let mut s = serde_json::to_string_pretty(&report).map_err(io_err)?;
    s.push('\n');
    Ok(s)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// CSV of the records, or of the audit rows followed by sharpness rows when
/// the result comes from an audit.
pub fn to_csv(result: &CampaignResult) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(audit) = &result.audit {
        w.write_record(AUDIT_COLUMNS).map_err(io_err)?;
        for r in &audit.reports {
            w.write_record([
                "audit".to_string(),
                r.claim.to_string(),
                r.n.to_string(),
                opt(r.s),
                r.alpha.to_string(),
                r.value.to_string(),
                format!("{:?}", r.sign),
                r.pass.to_string(),
            ])
            .map_err(io_err)?;
        }
        for r in &audit.sharpness {
            w.write_record([
                "sharpness".to_string(),
                "RhoMinusEta".to_string(),
                r.n.to_string(),
                String::new(),
                r.alpha.to_string(),
                r.difference.to_string(),
                "Zero".to_string(),
                r.pass.to_string(),
            ])
            .map_err(io_err)?;
        }
    } else {
        w.write_record(RECORD_COLUMNS).map_err(io_err)?;
        for r in &result.records {
            let v = r.violation.as_ref();
            w.write_record([
                r.index.to_string(),
                r.graph6.clone(),
                r.n.to_string(),
                r.alpha.to_string(),
                opt(r.p),
                r.family.clone().unwrap_or_default(),
                opt(r.s),
                r.rho.to_string(),
                r.eta.to_string(),
                r.in_domain.to_string(),
                format!("{:?}", r.bucket).to_uppercase(),
                r.above_threshold.to_string(),
                r.has_factor.to_string(),
                r.covered.to_string(),
                opt(r.direct_covered),
                opt(v.map(|v| v.kind)),
                v.map(|v| {
                    v.s.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default(),
                opt(v.map(|v| v.isolated)),
                opt(v.map(|v| v.bound)),
                serde_json::to_value(r.status)
                    .ok()
                    .and_then(|x| x.as_str().map(str::to_owned))
                    .unwrap_or_default(),
                opt(r.elapsed_us),
            ])
            .map_err(io_err)?;
        }
    }
    let bytes = w.into_inner().map_err(io_err)?;
    String::from_utf8(bytes).map_err(io_err)
}

pub fn render(result: &CampaignResult, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(result, unix_now()),
        Format::Csv => to_csv(result),
    }
}

/// Writes to `path`, or to standard output when `path` is `None`.
pub fn write(result: &CampaignResult, format: Format, path: Option<&Path>) -> Result<()> {
    let text = render(result, format)?;
    match path {
        Some(p) => std::fs::write(p, text).map_err(io_err),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io_err),
    }
}

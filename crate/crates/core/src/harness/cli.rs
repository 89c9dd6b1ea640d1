//! Command-line interface. Exit codes: 0 pass, 1 property-negative, 2 usage
//! or input error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::campaign::{self, CampaignConfig, Format, Mode};
use super::report;
use crate::error::{Error, Result};
use crate::factor::{self, Limits};
use crate::families::{self, Family};
use crate::graph::Graph;
use crate::graph6;
use crate::spectral;
use crate::thresholds::{self, AuditGrid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "specfac", version, about = "A_alpha spectral radii and path-factor covered graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the A_alpha spectral radius and spectrum of a graph.
    Spectral(SpectralArgs),
    /// Decide factor existence and coveredness.
    Check(CheckArgs),
    /// Run a verification campaign and write a report.
    Verify(VerifyArgs),
    /// Audit the threshold inequalities and the sharpness table.
    Audit(AuditArgs),
    /// Evaluate eta(n).
    Eta(ThresholdArgs),
    /// Evaluate theta(n).
    Theta(ThresholdArgs),
}

/// Inclusive order range written `14` or `14-30`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderRange {
    pub min: usize,
    pub max: usize,
}

pub fn parse_range(s: &str) -> std::result::Result<OrderRange, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad order {t:?}"));
    let (min, max) = match s.split_once('-') {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if min > max {
        return Err(format!("empty range {s:?}"));
    }
    Ok(OrderRange { min, max })
}

/// A real written as a decimal or a fraction `p/q`.
pub fn parse_real(s: &str) -> std::result::Result<f64, String> {
    let t = s.trim();
    let v = match t.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a.trim().parse().map_err(|_| format!("bad number {s:?}"))?;
            let b: f64 = b.trim().parse().map_err(|_| format!("bad number {s:?}"))?;
            a / b
        }
        None => t.parse().map_err(|_| format!("bad number {s:?}"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("bad number {s:?}"))
    }
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> std::result::Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Graph in graph6 format.
    #[arg(long, conflicts_with_all = ["family", "input"])]
    pub g6: Option<String>,
    /// complete | path | extremal | claim1 | case-b1 | case-b2 | case-b3 | case-b4
    #[arg(long, value_parser = parse_family, requires = "n")]
    pub family: Option<Family>,
    /// Order, or a range such as 14-30.
    #[arg(long, value_parser = parse_range)]
    pub n: Option<OrderRange>,
    /// Clique size for the case families.
    #[arg(long)]
    pub s: Option<usize>,
    /// File with one graph6 string per line.
    #[arg(long, conflicts_with = "family")]
    pub input: Option<PathBuf>,
}

impl GraphArgs {
    fn graphs(&self) -> Result<Vec<Graph>> {
        if let Some(g6) = &self.g6 {
            return Ok(vec![graph6::decode(g6.trim())?]);
        }
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            return text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(graph6::decode)
                .collect();
        }
        if let (Some(family), Some(range)) = (self.family, self.n) {
            return (range.min..=range.max)
                .map(|n| families::build(family, n, self.s).map(|f| f.graph))
                .collect();
        }
        Err(Error::Config("give --g6, --input, or --family with --n".into()))
    }
}

#[derive(Debug, Args)]
pub struct SpectralArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Comma-separated alpha values in [0, 1).
    #[arg(long, value_parser = parse_real, value_delimiter = ',', default_value = "0")]
    pub alpha: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// covered | factor
    #[arg(long, default_value = "covered", value_parser = ["covered", "factor"])]
    pub mode: String,
    /// Emit one JSON object per graph.
    #[arg(long)]
    pub json: bool,
    /// Largest order for the subset scans.
    #[arg(long, default_value_t = Limits::DEFAULT.subset_scan)]
    pub scan_limit: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// exhaustive | random | families | audit
    #[arg(long, value_parser = parse_mode, default_value = "random")]
    pub mode: Mode,
    /// Order or range; defaults depend on the mode.
    #[arg(long, value_parser = parse_range)]
    pub n: Option<OrderRange>,
    #[arg(long, value_parser = parse_real, value_delimiter = ',', default_value = "0")]
    pub alpha: Vec<f64>,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Comma-separated edge probabilities.
    #[arg(long, value_parser = parse_real, value_delimiter = ',', default_value = "0.5")]
    pub p: Vec<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_parser = parse_format, default_value = "json")]
    pub format: Format,
    /// Record per-graph wall time.
    #[arg(long)]
    pub timings: bool,
    /// Exhaustive mode cross-checks with the direct search up to this order.
    #[arg(long, default_value_t = 7)]
    pub oracle_max: usize,
    #[arg(long, default_value_t = Limits::DEFAULT.subset_scan)]
    pub scan_limit: usize,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long, value_parser = parse_range, default_value = "14-30")]
    pub n: OrderRange,
    /// Defaults to 0, 0.1, ..., 0.9 plus 2/3 and 3/4.
    #[arg(long, value_parser = parse_real, value_delimiter = ',')]
    pub alpha: Vec<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Machine-readable output; plain text when neither this nor --out is set.
    #[arg(long, value_parser = parse_format)]
    pub format: Option<Format>,
    #[arg(long, default_value_t = 30)]
    pub scan_limit: usize,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[arg(long, value_parser = parse_range)]
    pub n: OrderRange,
    #[arg(long, value_parser = parse_real, value_delimiter = ',', default_value = "0")]
    pub alpha: Vec<f64>,
}

/// `x` with 12 significant digits, trailing zeros removed.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-6..=15).contains(&mag) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// Runs a parsed command, writing to `out`/`err`, and returns the exit code.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Spectral(a) => cmd_spectral(&a, out),
        Command::Check(a) => cmd_check(&a, out),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Audit(a) => cmd_audit(&a, out),
        Command::Eta(a) => cmd_threshold(&a, true, out, err),
        Command::Theta(a) => cmd_threshold(&a, false, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli, out, err),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_ERROR
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            }
        }
    }
}

fn w(e: std::io::Error) -> Error {
    Error::Config(format!("I/O: {e}"))
}

fn cmd_spectral(a: &SpectralArgs, out: &mut dyn Write) -> Result<i32> {
    for g in a.graph.graphs()? {
        writeln!(out, "graph6: {}", graph6::encode(&g)).map_err(w)?;
        writeln!(out, "n: {}", g.order()).map_err(w)?;
        for &alpha in &a.alpha {
            let ev = spectral::a_alpha(&g, alpha)?.eigenvalues();
            let spectrum: Vec<String> = ev.iter().map(|&x| sig12(x)).collect();
            writeln!(out, "alpha: {}", sig12(alpha)).map_err(w)?;
            writeln!(out, "rho: {}", sig12(ev[0])).map_err(w)?;
            writeln!(out, "spectrum: {}", spectrum.join(" ")).map_err(w)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> Result<i32> {
    let limits = Limits {
        subset_scan: a.scan_limit,
        ..Limits::DEFAULT
    };
    let mut code = EXIT_OK;
    for g in a.graph.graphs()? {
        let g6 = graph6::encode(&g);
        let witness = if g.order() <= limits.witness {
            factor::find_p2_factor_with(&g, &limits)?
        } else {
            None
        };
        let has_factor = match &witness {
            Some(_) => true,
            None if g.order() <= limits.witness => false,
            None => factor::deficiency_check_with(&g, &limits)?.is_pass(),
        };
        let factor_verdict = if has_factor {
            None
        } else {
            factor::deficiency_check_with(&g, &limits)?.violation().copied()
        };
        let (ok, covered, violation) = if a.mode == "covered" {
            let v = factor::is_covered_structural_with(&g, &limits)?;
            (v.is_pass(), Some(v.is_pass()), v.violation().copied())
        } else {
            (has_factor, None, factor_verdict)
        };
        if !ok {
            code = EXIT_NEGATIVE;
        }
        if a.json {
            let obj = serde_json::json!({
                "graph6": g6,
                "n": g.order(),
                "has_factor": has_factor,
                "covered": covered,
                "violation": violation,
                "witness": witness.as_ref().map(|f| &f.paths),
            });
            writeln!(out, "{obj}").map_err(w)?;
        } else {
            let mut line = format!("{g6}: factor {}", if has_factor { "yes" } else { "no" });
            if let Some(c) = covered {
                line.push_str(if c { ", covered" } else { ", not covered" });
            }
            if let Some(v) = violation {
                line.push_str(&format!(" ({v})"));
            }
            writeln!(out, "{line}").map_err(w)?;
            if let Some(f) = &witness {
                let paths: Vec<String> = f
                    .paths
                    .iter()
                    .map(|p| p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("-"))
                    .collect();
                writeln!(out, "  witness: {}", paths.join(" ")).map_err(w)?;
            }
        }
    }
    Ok(code)
}

fn verify_config(a: &VerifyArgs) -> CampaignConfig {
    let (lo, hi) = match a.mode {
        Mode::Random => (14, 14),
        Mode::Exhaustive => (1, 7),
        Mode::Families => (14, 26),
        Mode::Audit => (14, 30),
    };
    let range = a.n.unwrap_or(OrderRange { min: lo, max: hi });
    CampaignConfig {
        mode: a.mode,
        n_min: range.min,
        n_max: range.max,
        alphas: a.alpha.clone(),
        trials: a.trials,
        seed: a.seed,
        p: a.p.clone(),
        out: a.out.clone(),
        format: a.format,
        timings: a.timings,
        oracle_max: a.oracle_max,
        limits: Limits {
            subset_scan: a.scan_limit,
            ..Limits::DEFAULT
        },
        ..CampaignConfig::default()
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let cfg = verify_config(a);
    let result = campaign::run(&cfg)?;
    let text = report::render(&result, cfg.format)?;
    match &cfg.out {
        Some(p) => std::fs::write(p, text).map_err(w)?,
        None => out.write_all(text.as_bytes()).map_err(w)?,
    }
    let s = &result.summary;
    writeln!(
        err,
        "{} mode: {} graphs, {} records (above {}, boundary {}, below {}), counterexamples {}, out-of-domain hits {}, oracle mismatches {}, family breaches {}, audit failures {}",
        cfg.mode,
        s.graphs,
        s.records,
        s.above,
        s.boundary,
        s.below,
        s.counterexamples,
        s.out_of_domain_hits,
        s.oracle_mismatches,
        s.family_breaches,
        s.audit_failed + s.sharpness_failed
    )
    .map_err(w)?;
    Ok(if s.clean() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_audit(a: &AuditArgs, out: &mut dyn Write) -> Result<i32> {
    let alphas = if a.alpha.is_empty() {
        AuditGrid::default().alphas
    } else {
        a.alpha.clone()
    };
    let cfg = CampaignConfig {
        mode: Mode::Audit,
        n_min: a.n.min,
        n_max: a.n.max,
        alphas,
        out: a.out.clone(),
        format: a.format.unwrap_or(Format::Json),
        limits: Limits {
            subset_scan: a.scan_limit,
            ..Limits::DEFAULT
        },
        ..CampaignConfig::default()
    };
    let result = campaign::run(&cfg)?;
    let clean = result.summary.clean();
    if a.out.is_some() || a.format.is_some() {
        let text = report::render(&result, cfg.format)?;
        match &a.out {
            Some(p) => std::fs::write(p, text).map_err(w)?,
            None => out.write_all(text.as_bytes()).map_err(w)?,
        }
    } else {
        let audit = result.audit.as_ref().expect("audit section");
        let failed: Vec<_> = audit.reports.iter().filter(|r| !r.pass).collect();
        writeln!(out, "inequality audit: {} checked, {} failed", audit.reports.len(), failed.len()).map_err(w)?;
        for r in failed {
            writeln!(out, "  FAIL {} n={} s={:?} alpha={} value={}", r.claim, r.n, r.s, sig12(r.alpha), r.value)
                .map_err(w)?;
        }
        writeln!(out, "{:>4} {:>8} {:>18} {:>18} {:>11}  domain  result", "n", "alpha", "eta", "rho", "difference")
            .map_err(w)?;
        for r in &audit.sharpness {
            writeln!(
                out,
                "{:>4} {:>8} {:>18} {:>18} {:>11.2e}  {:<6}  {}",
                r.n,
                sig12(r.alpha),
                sig12(r.eta),
                sig12(r.rho),
                r.difference,
                if r.in_domain { "yes" } else { "no" },
                if r.pass { "pass" } else { "FAIL" }
            )
            .map_err(w)?;
        }
    }
    Ok(if clean { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_threshold(a: &ThresholdArgs, is_eta: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let name = if is_eta { "eta" } else { "theta" };
    for n in a.n.min..=a.n.max {
        for &alpha in &a.alpha {
            let t = if is_eta {
                thresholds::eta(n, alpha)?
            } else {
                thresholds::theta(n, alpha)?
            };
            writeln!(out, "n={n} alpha={} {name}={}", sig12(alpha), sig12(t.value)).map_err(w)?;
            if !t.in_domain {
                writeln!(
                    err,
                    "warning: n={n} is below f({}) = {}",
                    sig12(alpha),
                    sig12(thresholds::f_alpha(alpha)?)
                )
                .map_err(w)?;
            }
        }
    }
    Ok(EXIT_OK)
}

//! Verification campaigns for the implication
//! `ρ_α(G) > η(n)` and `n >= f(α)` ⇒ `G` is covered.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::rng;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::factor::{self, Limits, Violation};
use crate::families::{self, Family};
use crate::graph::Graph;
use crate::graph6;
use crate::spectral::{self, check_alpha};
use crate::thresholds::{self, AuditGrid, AuditReport, CaseId};
use crate::tolerance::Tolerances;

/// Exhaustive mode stops at this order.
pub const MAX_EXHAUSTIVE_ORDER: usize = 9;

/// Sharpness rows must agree to this.
pub const SHARPNESS_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
    Families,
    Audit,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "random" => Ok(Mode::Random),
            "families" => Ok(Mode::Families),
            "audit" => Ok(Mode::Audit),
            _ => Err(Error::Config(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Random => "random",
            Mode::Families => "families",
            Mode::Audit => "audit",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Config(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CampaignConfig {
    pub mode: Mode,
    pub n_min: usize,
    pub n_max: usize,
    pub alphas: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    /// Edge probabilities; random mode runs every one of them.
    pub p: Vec<f64>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    pub format: Format,
    /// Records per-graph wall time; makes reports non-reproducible.
    pub timings: bool,
    /// Exhaustive mode also runs the edge-by-edge covered search up to this order.
    pub oracle_max: usize,
    pub limits: Limits,
    pub tolerances: Tolerances,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            mode: Mode::Random,
            n_min: 14,
            n_max: 14,
            alphas: vec![0.0],
            trials: 1000,
            seed: 1,
            p: vec![0.5],
            out: None,
            format: Format::Json,
            timings: false,
            oracle_max: 7,
            limits: Limits::DEFAULT,
            tolerances: Tolerances::DEFAULT,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("trial count must be at least 1".into()));
        }
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::Config(format!("bad order range {}..={}", self.n_min, self.n_max)));
        }
        if self.alphas.is_empty() {
            return Err(Error::Config("no alpha values".into()));
        }
        for &a in &self.alphas {
            check_alpha(a)?;
        }
        match self.mode {
            Mode::Random => {
                if self.p.is_empty() {
                    return Err(Error::Config("no edge probability".into()));
                }
                if let Some(&p) = self.p.iter().find(|p| !(0.0..=1.0).contains(*p)) {
                    return Err(Error::Config(format!("edge probability {p} is outside [0, 1]")));
                }
                if self.n_max > self.limits.subset_scan {
                    return Err(Error::TooLarge {
                        what: "random campaign",
                        order: self.n_max,
                        limit: self.limits.subset_scan,
                    });
                }
            }
            Mode::Exhaustive if self.n_max > MAX_EXHAUSTIVE_ORDER => {
                return Err(Error::TooLarge {
                    what: "exhaustive campaign",
                    order: self.n_max,
                    limit: MAX_EXHAUSTIVE_ORDER,
                })
            }
            Mode::Families if self.n_max > self.limits.subset_scan => {
                return Err(Error::TooLarge {
                    what: "families campaign",
                    order: self.n_max,
                    limit: self.limits.subset_scan,
                })
            }
            _ => {}
        }
        Ok(())
    }
}

/// Position of `ρ` relative to `η` with the tie dead zone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Bucket {
    Above,
    Boundary,
    Below,
}

impl Bucket {
    pub fn classify(rho: f64, eta: f64, margin: f64) -> Bucket {
        if rho > eta + margin {
            Bucket::Above
        } else if rho < eta - margin {
            Bucket::Below
        } else {
            Bucket::Boundary
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Ok,
    /// Above the threshold, `n >= f(α)`, and not covered.
    Counterexample,
    /// Above the threshold and not covered, but `n < f(α)`.
    OutOfDomainHit,
    /// Subset criterion and direct search disagree.
    OracleMismatch,
    /// A case graph with `ρ >= η` inside the domain.
    FamilyBreach,
}

/// One graph at one `α`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub alpha: f64,
    pub p: Option<f64>,
    pub family: Option<String>,
    pub s: Option<usize>,
    pub rho: f64,
    pub eta: f64,
    pub in_domain: bool,
    pub bucket: Bucket,
    pub above_threshold: bool,
    pub has_factor: bool,
    pub covered: bool,
    pub direct_covered: Option<bool>,
    pub violation: Option<Violation>,
    pub status: Status,
    pub elapsed_us: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub records: usize,
    pub emitted: usize,
    pub above: usize,
    pub boundary: usize,
    pub below: usize,
    pub covered: usize,
    pub not_covered: usize,
    pub counterexamples: usize,
    pub out_of_domain_hits: usize,
    pub oracle_mismatches: usize,
    pub family_breaches: usize,
    pub audit_checked: usize,
    pub audit_failed: usize,
    pub sharpness_failed: usize,
}

impl Summary {
    fn count(&mut self, r: &VerificationRecord) {
        self.records += 1;
        match r.bucket {
            Bucket::Above => self.above += 1,
            Bucket::Boundary => self.boundary += 1,
            Bucket::Below => self.below += 1,
        }
        if r.covered {
            self.covered += 1;
        } else {
            self.not_covered += 1;
        }
        match r.status {
            Status::Ok => {}
            Status::Counterexample => self.counterexamples += 1,
            Status::OutOfDomainHit => self.out_of_domain_hits += 1,
            Status::OracleMismatch => self.oracle_mismatches += 1,
            Status::FamilyBreach => self.family_breaches += 1,
        }
    }

    /// No counterexample, mismatch, breach or failed audit.
    pub fn clean(&self) -> bool {
        self.counterexamples == 0
            && self.oracle_mismatches == 0
            && self.family_breaches == 0
            && self.audit_failed == 0
            && self.sharpness_failed == 0
    }
}

/// `η(n)` against `ρ_α` of the extremal graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SharpnessRow {
    pub n: usize,
    pub alpha: f64,
    pub in_domain: bool,
    pub eta: f64,
    pub rho: f64,
    pub difference: f64,
    pub pass: bool,
    pub violation: Option<Violation>,
}

pub fn sharpness_row(n: usize, alpha: f64, limits: &Limits) -> Result<SharpnessRow> {
    let e = families::extremal_graph(n)?;
    let eta = thresholds::eta(n, alpha)?;
    let rho = spectral::spectral_radius(&e.graph, alpha)?;
    let verdict = factor::is_covered_structural_with(&e.graph, limits)?;
    let difference = rho - eta.value;
    Ok(SharpnessRow {
        n,
        alpha,
        in_domain: eta.in_domain,
        eta: eta.value,
        rho,
        difference,
        pass: difference.abs() <= SHARPNESS_TOL && !verdict.is_pass(),
        violation: verdict.violation().copied(),
    })
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct AuditSection {
    pub reports: Vec<AuditReport>,
    pub sharpness: Vec<SharpnessRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CampaignResult {
    pub config: CampaignConfig,
    pub summary: Summary,
    pub records: Vec<VerificationRecord>,
    pub audit: Option<AuditSection>,
}

/// Graph-level facts shared by every `α`.
struct GraphFacts {
    graph6: String,
    has_factor: bool,
    covered: bool,
    direct_covered: Option<bool>,
    violation: Option<Violation>,
}

fn graph_facts(g: &Graph, direct: bool, limits: &Limits) -> Result<GraphFacts> {
    let verdict = factor::is_covered_structural_with(g, limits)?;
    let has_factor = factor::has_p2_factor_with(g, limits)?;
    let direct_covered = if direct {
        Some(factor::is_covered_direct_with(g, limits)?)
    } else {
        None
    };
    Ok(GraphFacts {
        graph6: graph6::encode(g),
        has_factor,
        covered: verdict.is_pass(),
        direct_covered,
        violation: verdict.violation().copied(),
    })
}

struct Context<'a> {
    index: usize,
    p: Option<f64>,
    family: Option<String>,
    s: Option<usize>,
    started: Option<Instant>,
    cfg: &'a CampaignConfig,
}

fn evaluate(g: &Graph, facts: &GraphFacts, ctx: &Context, alpha: f64) -> Result<VerificationRecord> {
    let n = g.order();
    let rho = spectral::spectral_radius(g, alpha)?;
    let eta = thresholds::eta(n, alpha)?;
    let bucket = Bucket::classify(rho, eta.value, ctx.cfg.tolerances.tie_margin);
    let above = bucket == Bucket::Above;
    let status = if facts.direct_covered.is_some_and(|d| d != facts.covered) {
        Status::OracleMismatch
    } else if above && !facts.covered {
        if eta.in_domain {
            Status::Counterexample
        } else {
            Status::OutOfDomainHit
        }
    } else {
        Status::Ok
    };
    Ok(VerificationRecord {
        index: ctx.index,
        graph6: facts.graph6.clone(),
        n,
        alpha,
        p: ctx.p,
        family: ctx.family.clone(),
        s: ctx.s,
        rho,
        eta: eta.value,
        in_domain: eta.in_domain,
        bucket,
        above_threshold: above,
        has_factor: facts.has_factor,
        covered: facts.covered,
        direct_covered: facts.direct_covered,
        violation: facts.violation,
        status,
        elapsed_us: ctx.started.map(|t| t.elapsed().as_micros() as u64),
    })
}

fn evaluate_all_alphas(g: &Graph, ctx: &Context, direct: bool) -> Result<Vec<VerificationRecord>> {
    let facts = graph_facts(g, direct, &ctx.cfg.limits)?;
    ctx.cfg
        .alphas
        .iter()
        .map(|&a| evaluate(g, &facts, ctx, a))
        .collect()
}

/// Worker pool sized by `SPECFAC_THREADS` (rayon's default when unset).
pub fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("SPECFAC_THREADS") {
        let k: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("SPECFAC_THREADS={v:?} is not a positive integer")))?;
        if k == 0 {
            return Err(Error::Config("SPECFAC_THREADS must be at least 1".into()));
        }
        b = b.num_threads(k);
    }
    b.build().map_err(|e| Error::Config(e.to_string()))
}

pub fn run(cfg: &CampaignConfig) -> Result<CampaignResult> {
    cfg.validate()?;
    let pool = thread_pool()?;
    pool.install(|| match cfg.mode {
        Mode::Random => run_random(cfg),
        Mode::Exhaustive => run_exhaustive(cfg),
        Mode::Families => run_families(cfg),
        Mode::Audit => run_audit(cfg),
    })
}

fn finish(cfg: &CampaignConfig, mut summary: Summary, records: Vec<VerificationRecord>, keep_all: bool) -> CampaignResult {
    for r in &records {
        summary.count(r);
    }
    let records: Vec<_> = if keep_all {
        records
    } else {
        records
            .into_iter()
            .filter(|r| r.status != Status::Ok || r.bucket == Bucket::Boundary)
            .collect()
    };
    summary.emitted = records.len();
    CampaignResult {
        config: cfg.clone(),
        summary,
        records,
        audit: None,
    }
}

fn run_random(cfg: &CampaignConfig) -> Result<CampaignResult> {
    let orders = cfg.n_min..=cfg.n_max;
    let jobs: Vec<(f64, usize)> = cfg
        .p
        .iter()
        .flat_map(|&p| orders.clone().map(move |n| (p, n)))
        .collect();
    let seeds = rng::trial_seeds(cfg.seed, jobs.len() * cfg.trials);
    let tasks: Vec<(usize, f64, usize, u64)> = jobs
        .iter()
        .enumerate()
        .flat_map(|(j, &(p, n))| (0..cfg.trials).map(move |t| (j * cfg.trials + t, p, n)))
        .map(|(i, p, n)| (i, p, n, seeds[i]))
        .collect();

    let per_graph: Vec<Vec<VerificationRecord>> = tasks
        .par_iter()
        .map(|&(index, p, n, seed)| {
            let started = cfg.timings.then(Instant::now);
            let g = rng::trial_graph(n, p, seed)?;
            let ctx = Context {
                index,
                p: Some(p),
                family: None,
                s: None,
                started,
                cfg,
            };
            evaluate_all_alphas(&g, &ctx, false)
        })
        .collect::<Result<_>>()?;
    let summary = Summary {
        graphs: per_graph.len(),
        ..Summary::default()
    };
    Ok(finish(cfg, summary, per_graph.into_iter().flatten().collect(), true))
}

fn run_exhaustive(cfg: &CampaignConfig) -> Result<CampaignResult> {
    let mut graphs = 0;
    let mut records = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        let mut batch = Vec::new();
        enumerate::for_each_degree_ordered_connected(n, |g| batch.push(g.clone()))?;
        let direct = n <= cfg.oracle_max;
        let base = graphs;
        graphs += batch.len();
        let out: Vec<Vec<VerificationRecord>> = batch
            .par_iter()
            .enumerate()
            .map(|(i, g)| {
                let ctx = Context {
                    index: base + i,
                    p: None,
                    family: None,
                    s: None,
                    started: cfg.timings.then(Instant::now),
                    cfg,
                };
                evaluate_all_alphas(g, &ctx, direct)
            })
            .collect::<Result<_>>()?;
        records.extend(out.into_iter().flatten());
    }
    let summary = Summary {
        graphs,
        ..Summary::default()
    };
    Ok(finish(cfg, summary, records, false))
}

/// `(case, s)` pairs whose case graph has order `n` and that the proof rules
/// out: `s >= 2` for `B1`/`B2`, `s >= 5` for `B3`/`B4`.
pub fn family_cases(n: usize) -> Vec<(CaseId, usize)> {
    let mut out = Vec::new();
    for s in 2..=n {
        if n >= 3 * s + 2 {
            out.push((CaseId::B1, s));
        }
        if n >= 3 * s + 1 {
            out.push((CaseId::B2, s));
        }
        if s >= 5 && n + 1 == 3 * s {
            out.push((CaseId::B3, s));
        }
        if s >= 5 && n == 3 * s {
            out.push((CaseId::B4, s));
        }
    }
    out
}

fn run_families(cfg: &CampaignConfig) -> Result<CampaignResult> {
    let mut items = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        for (case, s) in family_cases(n) {
            items.push((case, n, s));
        }
    }
    let slack = cfg.tolerances.audit_slack;
    let per_graph: Vec<Vec<VerificationRecord>> = items
        .par_iter()
        .enumerate()
        .map(|(index, &(case, n, s))| {
            let inst = families::case_graph(case, n, s)?;
            let ctx = Context {
                index,
                p: None,
                family: Some(Family::from(case).to_string()),
                s: Some(s),
                started: cfg.timings.then(Instant::now),
                cfg,
            };
            let mut recs = evaluate_all_alphas(&inst.graph, &ctx, false)?;
            for r in &mut recs {
                if r.in_domain && r.eta - r.rho <= slack && r.status == Status::Ok {
                    r.status = Status::FamilyBreach;
                }
            }
            Ok(recs)
        })
        .collect::<Result<_>>()?;
    let summary = Summary {
        graphs: per_graph.len(),
        ..Summary::default()
    };
    Ok(finish(cfg, summary, per_graph.into_iter().flatten().collect(), true))
}

fn run_audit(cfg: &CampaignConfig) -> Result<CampaignResult> {
    let grid = AuditGrid {
        alphas: cfg.alphas.clone(),
        n_max: cfg.n_max,
        n_min: None,
        printed_samples: AuditGrid::default().printed_samples,
    };
    let mut reports = thresholds::audit_grid(&grid)?;
    reports.retain(|r| r.n >= cfg.n_min);
    let mut jobs = Vec::new();
    for &alpha in &cfg.alphas {
        for n in cfg.n_min.max(5)..=cfg.n_max {
            jobs.push((n, alpha));
        }
    }
    let sharpness: Vec<SharpnessRow> = jobs
        .par_iter()
        .map(|&(n, alpha)| sharpness_row(n, alpha, &cfg.limits))
        .collect::<Result<_>>()?;
    let summary = Summary {
        audit_checked: reports.len(),
        audit_failed: reports.iter().filter(|r| !r.pass).count(),
        sharpness_failed: sharpness.iter().filter(|r| r.in_domain && !r.pass).count(),
        ..Summary::default()
    };
    Ok(CampaignResult {
        config: cfg.clone(),
        summary,
        records: Vec::new(),
        audit: Some(AuditSection { reports, sharpness }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn buckets() {
        assert_eq!(Bucket::classify(1.0, 1.0, 1e-7), Bucket::Boundary);
        assert_eq!(Bucket::classify(1.0 + 2e-7, 1.0, 1e-7), Bucket::Above);
        assert_eq!(Bucket::classify(1.0 - 2e-7, 1.0, 1e-7), Bucket::Below);
    }

    #[test]
    fn family_case_lists() {
        let c = family_cases(14);
        assert!(c.contains(&(CaseId::B1, 4)));
        assert!(!c.contains(&(CaseId::B1, 5)));
        assert!(c.contains(&(CaseId::B2, 4)));
        assert!(c.contains(&(CaseId::B3, 5)));
        assert!(!c.iter().any(|&(k, _)| k == CaseId::B4));
        assert!(family_cases(15).contains(&(CaseId::B4, 5)));
    }

    #[test]
    fn config_validation() {
        let ok = CampaignConfig::default();
        assert!(ok.validate().is_ok());
        assert!(CampaignConfig { trials: 0, ..ok.clone() }.validate().is_err());
        assert!(CampaignConfig { alphas: vec![1.0], ..ok.clone() }.validate().is_err());
        assert!(CampaignConfig { p: vec![1.2], ..ok.clone() }.validate().is_err());
        assert!(CampaignConfig {
            mode: Mode::Exhaustive,
            n_min: 3,
            n_max: 10,
            ..ok
        }
        .validate()
        .is_err());
    }

    #[test]
    fn small_random_campaign_is_reproducible() {
        let cfg = CampaignConfig {
            trials: 5,
            alphas: vec![0.0, 0.5],
            p: vec![0.9],
            ..CampaignConfig::default()
        };
        let a = run(&cfg).unwrap();
        let b = run(&cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.records.len(), 10);
        assert_eq!(a.summary.counterexamples, 0);
    }

    #[test]
    fn sharpness_at_14() {
        let r = sharpness_row(14, 0.0, &Limits::DEFAULT).unwrap();
        assert!(r.pass && r.in_domain, "{r:?}");
    }
}

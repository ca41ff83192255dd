use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use bps_core::acceptance::{self, AcceptanceConfig, CriterionResult, CRITERIA};
use bps_core::bigpoly::{self, betti_sum_e, ht_syzygy_order, poincare_polynomial_x, IntPoly, Report, SpaceParams};
use bps_core::gradedmod::{koszul_syzygy_presentation, minimal_free_resolution, syzygy_order, BettiEntry, KoszulData};
use bps_core::lenvec::{enumerate_chambers_checked, ChamberEnumeration, ChamberRecord};
use bps_core::{Chamber, Error, GbConfig, LengthVector};

use crate::cache::{CacheEntry, ResultsCache};
use crate::config::RunConfig;
use crate::error::{core_exit_code, exit, CliError};

pub fn analyze(lengths: &str, a: u32, b: u32, cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.check_cap(b)?;
    let l: LengthVector = lengths.parse()?;
    let p = SpaceParams::new(l, a, b)?;
    Ok(bigpoly::analyze(&p, &cfg.gb())?)
}

/// Flat CSV form of a [`Report`].
#[derive(Debug, Serialize)]
pub struct ReportRow {
    pub representative: String,
    pub chamber_id: String,
    pub a: u32,
    pub b: u32,
    pub mu: usize,
    pub syzord: usize,
    pub conjecture_ok: bool,
    #[serde(rename = "poincare_X")]
    pub poincare_x: String,
    #[serde(rename = "betti_sum_E")]
    pub betti_sum_e: i64,
    pub pairing_perfect: bool,
}

impl From<&Report> for ReportRow {
    fn from(r: &Report) -> Self {
        ReportRow {
            representative: r.representative.to_string(),
            chamber_id: r.chamber_id.clone(),
            a: r.a,
            b: r.b,
            mu: r.mu,
            syzord: r.syzord,
            conjecture_ok: r.conjecture_ok,
            poincare_x: r.poincare_x.to_string(),
            betti_sum_e: r.betti_sum_e,
            pairing_perfect: r.pairing_perfect,
        }
    }
}

pub fn default_entry_bound(r: usize) -> i64 {
    2 * r as i64
}

pub fn chambers(r: usize, entry_bound: Option<i64>) -> Result<ChamberEnumeration, CliError> {
    Ok(enumerate_chambers_checked(r, entry_bound.unwrap_or_else(|| default_entry_bound(r)))?)
}

/// Reads a database written by `chambers`, re-validating every chamber
/// against its representative.
pub fn load_chambers(path: &Path, r: usize) -> Result<Vec<Chamber>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let reps: Vec<LengthVector> = if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        let mut out = Vec::new();
        for rec in rd.deserialize::<ChamberRecord>() {
            let rec = rec?;
            let l: LengthVector = rec.representative.parse()?;
            if l.chamber()?.id() != rec.chamber_id {
                return Err(mismatch(path, &rec.chamber_id));
            }
            out.push(l);
        }
        out
    } else {
        let db: ChamberEnumeration = serde_json::from_str(&text)?;
        let mut out = Vec::new();
        for c in &db.chambers {
            let c = Chamber::from_encoding(c.r(), c.encoding()).and_then(|checked| {
                let l = c
                    .representative()
                    .cloned()
                    .ok_or_else(|| Error::Shape(format!("chamber {} has no representative", checked.id())))?;
                Ok((checked, l))
            });
            let (checked, l) = c?;
            if l.chamber()? != checked {
                return Err(mismatch(path, &checked.id()));
            }
            out.push(l);
        }
        out
    };
    let mut chambers = Vec::with_capacity(reps.len());
    for l in reps {
        if l.r() != r {
            return Err(CliError::Usage(format!(
                "{}: chamber {l} has r = {}, expected {r}",
                path.display(),
                l.r()
            )));
        }
        chambers.push(l.chamber()?);
    }
    Ok(chambers)
}

fn mismatch(path: &Path, id: &str) -> CliError {
    CliError::Usage(format!("{}: representative does not lie in chamber {id}", path.display()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChamberStatus {
    Pass,
    Violation,
    /// A degree cap, pair limit or timeout stopped the computation.
    Capped,
    Error,
}

/// Outcome of the conjecture check on one chamber.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChamberReport {
    pub chamber_id: String,
    pub representative: LengthVector,
    pub mu: usize,
    pub a: u32,
    pub syzord_b1: Option<usize>,
    pub syzord_b2: Option<usize>,
    /// Every requested syzygy order was computed and equals `μ − 1`.
    pub conjecture_ok: bool,
    #[serde(rename = "poincare_X_b1")]
    pub poincare_x_b1: Option<IntPoly>,
    #[serde(rename = "poincare_X_b2")]
    pub poincare_x_b2: Option<IntPoly>,
    #[serde(rename = "betti_sum_E")]
    pub betti_sum_e: i64,
    pub status: ChamberStatus,
    pub error: Option<String>,
    /// Results taken from the cache instead of recomputed.
    pub cached: usize,
    pub millis: u64,
}

#[derive(Debug, Serialize)]
pub struct ChamberRow {
    pub chamber_id: String,
    pub representative: String,
    pub mu: usize,
    pub a: u32,
    pub syzord_b1: Option<usize>,
    pub syzord_b2: Option<usize>,
    pub conjecture_ok: bool,
    #[serde(rename = "betti_sum_E")]
    pub betti_sum_e: i64,
    pub status: ChamberStatus,
    pub error: Option<String>,
    pub cached: usize,
    pub millis: u64,
}

impl From<&ChamberReport> for ChamberRow {
    fn from(c: &ChamberReport) -> Self {
        ChamberRow {
            chamber_id: c.chamber_id.clone(),
            representative: c.representative.to_string(),
            mu: c.mu,
            a: c.a,
            syzord_b1: c.syzord_b1,
            syzord_b2: c.syzord_b2,
            conjecture_ok: c.conjecture_ok,
            betti_sum_e: c.betti_sum_e,
            status: c.status,
            error: c.error.clone(),
            cached: c.cached,
            millis: c.millis,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub r: usize,
    pub a: u32,
    pub bs: Vec<u32>,
    pub total: usize,
    pub passed: usize,
    pub violations: usize,
    pub capped: usize,
    pub errors: usize,
    pub chambers: Vec<ChamberReport>,
}

impl SweepSummary {
    pub fn summary_line(&self) -> String {
        format!("{}/{} chambers satisfy syzord = μ−1", self.passed, self.total)
    }

    pub fn exit_code(&self) -> u8 {
        if self.violations > 0 {
            exit::VIOLATION
        } else if self.errors > 0 {
            exit::FAILURE
        } else if self.capped > 0 {
            exit::RESOURCE_CAP
        } else {
            exit::OK
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub r: usize,
    pub a: u32,
    /// Subset of `{1, 2}`.
    pub bs: Vec<u32>,
    pub entry_bound: Option<i64>,
    pub db: Option<PathBuf>,
    pub use_cache: bool,
}

pub fn verify_conjecture(opts: &SweepOptions, cfg: &RunConfig) -> Result<SweepSummary, CliError> {
    if opts.bs.is_empty() || opts.bs.iter().any(|b| !matches!(b, 1 | 2)) {
        return Err(CliError::Usage("--b must be 1 or 2".into()));
    }
    for &b in &opts.bs {
        cfg.check_cap(b)?;
    }
    let chambers = match &opts.db {
        Some(db) => load_chambers(db, opts.r)?,
        None => {
            let e = chambers(opts.r, opts.entry_bound)?;
            if !e.stabilized {
                eprintln!(
                    "warning: chamber enumeration for r = {} did not stabilize at entry bound {}",
                    e.r, e.entry_bound
                );
            }
            e.chambers
        }
    };
    let mut cache = match (&opts.db, opts.use_cache) {
        (Some(db), true) => ResultsCache::open(ResultsCache::path_beside(db))?,
        _ => ResultsCache::disabled(),
    };

    let sweep = || {
        chambers
            .par_iter()
            .map(|c| check_chamber(c, opts, cfg, &cache))
            .collect::<Vec<_>>()
    };
    let results = match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?
            .install(sweep),
        None => sweep(),
    };

    let mut reports = Vec::with_capacity(results.len());
    for (report, fresh) in results {
        for e in fresh {
            cache.insert(e);
        }
        reports.push(report);
    }
    cache.flush()?;

    let count = |s: ChamberStatus| reports.iter().filter(|c| c.status == s).count();
    Ok(SweepSummary {
        r: opts.r,
        a: opts.a,
        bs: opts.bs.clone(),
        total: reports.len(),
        passed: count(ChamberStatus::Pass),
        violations: count(ChamberStatus::Violation),
        capped: count(ChamberStatus::Capped),
        errors: count(ChamberStatus::Error),
        chambers: reports,
    })
}

fn check_chamber(
    c: &Chamber,
    opts: &SweepOptions,
    cfg: &RunConfig,
    cache: &ResultsCache,
) -> (ChamberReport, Vec<CacheEntry>) {
    let start = Instant::now();
    let gb: GbConfig = cfg.gb();
    let id = c.id();
    let mu = c.mu();
    let l = c.representative().cloned().expect("swept chambers carry a representative");
    let mut report = ChamberReport {
        chamber_id: id.clone(),
        representative: l.clone(),
        mu,
        a: opts.a,
        syzord_b1: None,
        syzord_b2: None,
        conjecture_ok: false,
        poincare_x_b1: None,
        poincare_x_b2: None,
        betti_sum_e: betti_sum_e(&l).unwrap_or_default(),
        status: ChamberStatus::Pass,
        error: None,
        cached: 0,
        millis: 0,
    };
    let mut fresh = Vec::new();
    let mut failure: Option<Error> = None;
    for &b in &opts.bs {
        let p = match SpaceParams::new(l.clone(), opts.a, b) {
            Ok(p) => p,
            Err(e) => {
                failure = Some(e);
                break;
            }
        };
        let syz = match cache.get(&id, b).filter(|e| e.mu == mu) {
            Some(e) => {
                report.cached += 1;
                Some(e.syzord)
            }
            None => match ht_syzygy_order(&p, &gb) {
                Ok(s) => {
                    fresh.push(CacheEntry {
                        chamber_id: id.clone(),
                        b,
                        mu,
                        syzord: s,
                    });
                    Some(s)
                }
                Err(e) => {
                    failure.get_or_insert(e);
                    None
                }
            },
        };
        let px = Some(poincare_polynomial_x(&p));
        if b == 1 {
            report.syzord_b1 = syz;
            report.poincare_x_b1 = px;
        } else {
            report.syzord_b2 = syz;
            report.poincare_x_b2 = px;
        }
    }
    let computed: Vec<usize> = [report.syzord_b1, report.syzord_b2].into_iter().flatten().collect();
    let violated = computed.iter().any(|&s| s + 1 != mu);
    report.conjecture_ok = failure.is_none() && !violated;
    report.status = if violated {
        ChamberStatus::Violation
    } else if let Some(e) = &failure {
        if core_exit_code(e) == exit::RESOURCE_CAP {
            ChamberStatus::Capped
        } else {
            ChamberStatus::Error
        }
    } else {
        ChamberStatus::Pass
    };
    report.error = failure.map(|e| e.to_string());
    report.millis = start.elapsed().as_millis() as u64;
    (report, fresh)
}

/// Invariants of the Koszul syzygy module `K_k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KoszulReport {
    pub r: usize,
    pub b: u32,
    pub k: usize,
    pub num_generators: usize,
    pub num_relations: usize,
    pub ranks: Vec<usize>,
    pub betti: Vec<BettiEntry>,
    pub hilbert_series: String,
    /// `(degree, coefficient)` pairs of the numerator over `(1 − x²)^r`.
    pub hilbert_numerator: Vec<(i64, i64)>,
    pub syzord: usize,
}

pub fn koszul(r: usize, b: u32, k: usize, cfg: &RunConfig) -> Result<KoszulReport, CliError> {
    cfg.check_cap(b)?;
    let data = KoszulData::new(r, b)?;
    let p = koszul_syzygy_presentation(k, &data)?;
    let gb = cfg.gb();
    let res = minimal_free_resolution(&p, r + 1, &gb)?;
    let hs = res.hilbert_series();
    let table = res.betti_table();
    Ok(KoszulReport {
        r,
        b,
        k,
        num_generators: p.num_generators(),
        num_relations: p.num_relations(),
        ranks: table.ranks(),
        betti: table.rows(),
        hilbert_series: hs.to_string(),
        hilbert_numerator: hs.numerator().iter().map(|(&d, &c)| (d, c)).collect(),
        syzord: syzygy_order(&p, &gb)?,
    })
}

pub fn selftest(budget_secs: u64, cfg: &RunConfig) -> Result<Vec<CriterionResult>, CliError> {
    let acfg = AcceptanceConfig {
        gb: GbConfig {
            deadline: None,
            ..cfg.gb()
        },
        sweep_budget: std::time::Duration::from_secs(budget_secs),
    };
    let run = || {
        CRITERIA
            .par_iter()
            .map(|(id, _)| acceptance::run_criterion(*id, &acfg))
            .collect::<Vec<_>>()
    };
    Ok(match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    })
}

//! Bound-verification campaigns over graph catalogs.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bondage::{bondage_number, hr_bound};
use crate::bounds::{
    girth_bound, gz_bound, gz_improved_bound, h1_bound, h2_bound, sachs_bound, Chi,
};
use crate::domination::domination_number;
use crate::embedding::max_euler_characteristic_seeded;
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::graph6;

/// Column order of the CSV report; JSON rows use the same keys.
pub const CSV_COLUMNS: &[&str] = &[
    "id",
    "graph6",
    "n",
    "m",
    "max_degree",
    "min_degree",
    "girth",
    "gamma",
    "bondage",
    "bondage_status",
    "witness",
    "chi",
    "chi_source",
    "genus_h",
    "genus_k",
    "hr",
    "hr_status",
    "ky",
    "ky_status",
    "gz",
    "gz_status",
    "gz_improved",
    "gz_improved_status",
    "h1",
    "h1_status",
    "h2",
    "h2_status",
    "sachs",
    "sachs_status",
    "girth_bound",
    "girth_bound_status",
    "forest",
    "forest_status",
    "conj_teschner",
    "conj_teschner_status",
    "conj_planar",
    "conj_planar_status",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    /// A theorem's bound is exceeded.
    Fail,
    /// A conjectured bound is exceeded.
    Finding,
    /// The bound applies but the bondage number is unknown.
    Unknown,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChiSource {
    Computed,
    Supplied,
    Unavailable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BondageStatus {
    Exact,
    BudgetExceeded,
    Edgeless,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub id: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: Option<usize>,
    pub min_degree: Option<usize>,
    pub girth: String,
    pub gamma: usize,
    pub bondage: Option<usize>,
    pub bondage_status: BondageStatus,
    /// Space separated `u-v` pairs.
    pub witness: String,
    pub chi: Option<i64>,
    pub chi_source: ChiSource,
    pub genus_h: Option<u64>,
    pub genus_k: Option<u64>,
    pub hr: Option<u64>,
    pub hr_status: CheckStatus,
    pub ky: Option<u64>,
    pub ky_status: CheckStatus,
    pub gz: Option<u64>,
    pub gz_status: CheckStatus,
    pub gz_improved: Option<u64>,
    pub gz_improved_status: CheckStatus,
    pub h1: Option<u64>,
    pub h1_status: CheckStatus,
    pub h2: Option<u64>,
    pub h2_status: CheckStatus,
    pub sachs: Option<u64>,
    pub sachs_status: CheckStatus,
    pub girth_bound: Option<u64>,
    pub girth_bound_status: CheckStatus,
    pub forest: Option<u64>,
    pub forest_status: CheckStatus,
    pub conj_teschner: Option<u64>,
    pub conj_teschner_status: CheckStatus,
    pub conj_planar: Option<u64>,
    pub conj_planar_status: CheckStatus,
}

impl BoundReport {
    pub fn statuses(&self) -> [(&'static str, CheckStatus); 11] {
        [
            ("hr", self.hr_status),
            ("ky", self.ky_status),
            ("gz", self.gz_status),
            ("gz_improved", self.gz_improved_status),
            ("h1", self.h1_status),
            ("h2", self.h2_status),
            ("sachs", self.sachs_status),
            ("girth_bound", self.girth_bound_status),
            ("forest", self.forest_status),
            ("conj_teschner", self.conj_teschner_status),
            ("conj_planar", self.conj_planar_status),
        ]
    }

    pub fn violations(&self) -> usize {
        self.statuses()
            .iter()
            .filter(|(_, s)| *s == CheckStatus::Fail)
            .count()
    }

    pub fn findings(&self) -> usize {
        self.statuses()
            .iter()
            .filter(|(_, s)| *s == CheckStatus::Finding)
            .count()
    }
}

/// Which families of bounds a campaign evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub hr: bool,
    /// Also covers the Kang–Yuan planar bound and the refined variant.
    pub gz: bool,
    pub h1: bool,
    pub h2: bool,
    pub sachs: bool,
    /// Also covers `b <= 2` for forests.
    pub girth: bool,
    pub conj: bool,
}

impl Checks {
    pub const ALL: Checks = Checks {
        hr: true,
        gz: true,
        h1: true,
        h2: true,
        sachs: true,
        girth: true,
        conj: true,
    };
    pub const NONE: Checks = Checks {
        hr: false,
        gz: false,
        h1: false,
        h2: false,
        sachs: false,
        girth: false,
        conj: false,
    };
}

impl Default for Checks {
    fn default() -> Self {
        Checks::ALL
    }
}

impl FromStr for Checks {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut checks = Checks::NONE;
        for name in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match name {
                "hr" => checks.hr = true,
                "gz" => checks.gz = true,
                "h1" => checks.h1 = true,
                "h2" => checks.h2 = true,
                "sachs" => checks.sachs = true,
                "girth" => checks.girth = true,
                "conj" => checks.conj = true,
                "all" => checks = Checks::ALL,
                other => return Err(Error::InvalidArgument(format!("unknown check {other:?}"))),
            }
        }
        Ok(checks)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignConfig {
    pub inputs: Vec<PathBuf>,
    /// Use this Euler characteristic instead of searching rotation systems.
    pub chi_override: Option<i64>,
    pub checks: Checks,
    /// Maximum subset size for the bondage search; `None` uses the
    /// Hartnell–Rall bound.
    pub bondage_budget: Option<usize>,
    pub rotation_budget: u128,
    /// Search signed rotation systems (all surfaces) as well as orientable ones.
    pub allow_signatures: bool,
    pub workers: usize,
    pub format: OutputFormat,
    pub seed: u64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            inputs: Vec::new(),
            chi_override: None,
            checks: Checks::ALL,
            bondage_budget: None,
            rotation_budget: 2_000_000,
            allow_signatures: false,
            workers: 1,
            format: OutputFormat::Csv,
            seed: 0,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.bondage_budget == Some(0) {
            return Err(Error::InvalidArgument(
                "bondage budget must be positive".into(),
            ));
        }
        if self.rotation_budget == 0 {
            return Err(Error::InvalidArgument(
                "rotation budget must be positive".into(),
            ));
        }
        if self.workers == 0 {
            return Err(Error::InvalidArgument(
                "worker count must be positive".into(),
            ));
        }
        if let Some(chi) = self.chi_override {
            Chi::new(chi)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub graphs: usize,
    /// Failed theorem checks, summed over rows.
    pub violations: usize,
    pub rows_with_violations: usize,
    /// Exceeded conjectured bounds, summed over rows.
    pub findings: usize,
    pub bondage_budget_exceeded: usize,
    pub chi_unavailable: usize,
    pub edgeless: usize,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graphs={} violations={} rows_with_violations={} findings={} bondage_budget_exceeded={} chi_unavailable={} edgeless={}",
            self.graphs,
            self.violations,
            self.rows_with_violations,
            self.findings,
            self.bondage_budget_exceeded,
            self.chi_unavailable,
            self.edgeless
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Campaign {
    pub rows: Vec<BoundReport>,
    pub summary: Summary,
}

impl Campaign {
    fn from_rows(rows: Vec<BoundReport>) -> Self {
        let summary = Summary {
            graphs: rows.len(),
            violations: rows.iter().map(BoundReport::violations).sum(),
            rows_with_violations: rows.iter().filter(|r| r.violations() > 0).count(),
            findings: rows.iter().map(BoundReport::findings).sum(),
            bondage_budget_exceeded: rows
                .iter()
                .filter(|r| r.bondage_status == BondageStatus::BudgetExceeded)
                .count(),
            chi_unavailable: rows
                .iter()
                .filter(|r| r.chi_source == ChiSource::Unavailable)
                .count(),
            edgeless: rows
                .iter()
                .filter(|r| r.bondage_status == BondageStatus::Edgeless)
                .count(),
        };
        Campaign { rows, summary }
    }

    /// 0 when no theorem check failed, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.violations > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        if self.rows.is_empty() {
            writer.write_record(CSV_COLUMNS).map_err(csv_error)?;
        }
        for row in &self.rows {
            writer.serialize(row).map_err(csv_error)?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::InvalidArgument(e.to_string()))
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json().map(|s| s + "\n"),
        }
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::InvalidArgument(format!("csv: {e}"))
}

struct SurfaceData {
    chi: i64,
    h: Option<u64>,
    k: Option<u64>,
}

/// Euler characteristic of the best surface for each component, combined by
/// additivity of Euler genus over components.
fn search_chi(g: &Graph, config: &CampaignConfig, seed: u64) -> Option<SurfaceData> {
    let comps = g.components();
    let combine = |allow: bool| -> Option<i64> {
        let mut total = 2;
        for c in &comps {
            let chi =
                max_euler_characteristic_seeded(&c.graph, config.rotation_budget, allow, seed)
                    .ok()?;
            total += chi - 2;
        }
        Some(total)
    };
    let orientable = combine(false)?;
    let h = ((2 - orientable) / 2) as u64;
    if !config.allow_signatures {
        return Some(SurfaceData {
            chi: orientable,
            h: Some(h),
            k: None,
        });
    }
    let any = combine(true)?;
    // when the best signed embedding beats every orientable one it lies on a
    // non-orientable surface, which pins down k
    let k = (any > orientable).then_some((2 - any) as u64);
    Some(SurfaceData {
        chi: any,
        h: Some(h),
        k,
    })
}

fn surface_from_override(chi: i64) -> SurfaceData {
    if chi % 2 == 0 {
        SurfaceData {
            chi,
            h: Some(((2 - chi) / 2) as u64),
            k: None,
        }
    } else {
        SurfaceData {
            chi,
            h: None,
            k: Some((2 - chi) as u64),
        }
    }
}

fn row_seed(seed: u64, id: usize) -> u64 {
    seed ^ (id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Evaluates every selected bound on one graph.
pub fn evaluate_graph(g: &Graph, id: usize, config: &CampaignConfig) -> BoundReport {
    let delta = g.max_degree().ok();
    let girth = g.girth();
    let gamma = domination_number(g).size();
    let (bondage, bondage_status, witness) = if g.m() == 0 {
        (None, BondageStatus::Edgeless, String::new())
    } else {
        match bondage_number(g, config.bondage_budget) {
            Ok(res) => (
                Some(res.b),
                BondageStatus::Exact,
                res.witness
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
            Err(_) => (None, BondageStatus::BudgetExceeded, String::new()),
        }
    };
    let (surface, chi_source) = match config.chi_override {
        Some(chi) => (Some(surface_from_override(chi)), ChiSource::Supplied),
        None if g.n() == 0 => (None, ChiSource::Unavailable),
        None => match search_chi(g, config, row_seed(config.seed, id)) {
            Some(s) => (Some(s), ChiSource::Computed),
            None => (None, ChiSource::Unavailable),
        },
    };
    let chi = surface.as_ref().map(|s| s.chi);

    let judge = |bound: u64| match bondage {
        Some(b) if b as u64 <= bound => CheckStatus::Pass,
        Some(_) => CheckStatus::Fail,
        None => CheckStatus::Unknown,
    };
    let conjecture = |bound: u64| match judge(bound) {
        CheckStatus::Fail => CheckStatus::Finding,
        other => other,
    };
    let active = bondage_status != BondageStatus::Edgeless;
    let d = delta.unwrap_or(0) as u64;
    let nonpositive_chi = chi
        .filter(|&x| x <= 0)
        .map(|x| Chi::new(x).expect("chi <= 0"));
    let planar = chi == Some(2);

    let bound = |enabled: bool, value: Option<u64>| -> (Option<u64>, CheckStatus) {
        match value {
            Some(v) if enabled && active => (Some(v), judge(v)),
            _ => (None, CheckStatus::Skipped),
        }
    };
    let (hr, hr_status) = bound(config.checks.hr, hr_bound(g).ok().map(|v| v as u64));
    let (ky, ky_status) = bound(config.checks.gz && planar, Some((d + 2).min(8)));
    let (h, k) = surface.as_ref().map_or((None, None), |s| (s.h, s.k));
    let (gz, gz_status) = bound(config.checks.gz, gz_bound(d, h, k).ok());
    let (gz_improved, gz_improved_status) =
        bound(config.checks.gz, gz_improved_bound(d, h, k).ok());
    let (h1, h1_status) = bound(
        config.checks.h1,
        nonpositive_chi.and_then(|c| h1_bound(d, c).ok()),
    );
    let (h2, h2_status) = bound(
        config.checks.h2,
        nonpositive_chi.and_then(|c| h2_bound(d, c).ok()),
    );
    let (sachs, sachs_status) = bound(
        config.checks.sachs,
        nonpositive_chi.and_then(|c| sachs_bound(d, c).ok()),
    );
    let (girth_value, girth_bound_status) = bound(
        config.checks.girth,
        nonpositive_chi.and_then(|c| girth_bound(d, c, girth).ok()),
    );
    let (forest, forest_status) = bound(config.checks.girth && girth == Girth::Infinite, Some(2));
    let (conj_teschner, conj_teschner_status) = match bound(config.checks.conj, Some(3 * d / 2)) {
        (Some(v), _) => (Some(v), conjecture(v)),
        other => other,
    };
    let (conj_planar, conj_planar_status) = match bound(config.checks.conj && planar, Some(d + 1)) {
        (Some(v), _) => (Some(v), conjecture(v)),
        other => other,
    };

    BoundReport {
        id,
        graph6: graph6::encode(g),
        n: g.n(),
        m: g.m(),
        max_degree: delta,
        min_degree: g.min_degree().ok(),
        girth: girth.to_string(),
        gamma,
        bondage,
        bondage_status,
        witness,
        chi,
        chi_source,
        genus_h: h,
        genus_k: k,
        hr,
        hr_status,
        ky,
        ky_status,
        gz,
        gz_status,
        gz_improved,
        gz_improved_status,
        h1,
        h1_status,
        h2,
        h2_status,
        sachs,
        sachs_status,
        girth_bound: girth_value,
        girth_bound_status,
        forest,
        forest_status,
        conj_teschner,
        conj_teschner_status,
        conj_planar,
        conj_planar_status,
    }
}

/// Runs the campaign on in-memory graphs; row ids start at 1. Rows come back
/// in input order whatever the worker count.
pub fn verify_graphs(graphs: &[Graph], config: &CampaignConfig) -> Result<Campaign> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
    let rows = pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| evaluate_graph(g, i + 1, config))
            .collect::<Vec<_>>()
    });
    Ok(Campaign::from_rows(rows))
}

/// Reads every input file (graph6, one graph per line) and runs the campaign.
pub fn run_campaign(config: &CampaignConfig) -> Result<Campaign> {
    if config.inputs.is_empty() {
        return Err(Error::InvalidArgument("no input files".into()));
    }
    let mut graphs = Vec::new();
    for path in &config.inputs {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
        graphs.extend(graph6::decode_all(&text)?);
    }
    verify_graphs(&graphs, config)
}

//! Running groups of checks, and an on-disk cache for expensive objects.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bialgebra::{verify_cobracket_via_s, verify_cybe};
use crate::error::{Error, Result};
use crate::periplectic::verify_manin_triple;
use crate::qbrauer::{verify_brauer, verify_module_homs, verify_ps_formula, verify_q1_degeneration};
use crate::report::VerificationReport;
use crate::smatrix::{build_s, verify_decomposition, verify_proof_lemmas, verify_qybe, Mode, SMatrix};
use crate::superspace::GradedOperator;
use crate::uqpn::{
    extract_relations, verify_classical_limit, verify_cobracket_limit, verify_pbw, verify_relations, verify_representations,
    RelationSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Manin,
    Cybe,
    Cobracket,
    Qybe,
    Decomposition,
    Lemmas,
    Relations,
    Representations,
    Pbw,
    ClassicalLimit,
    CobracketLimit,
    Brauer,
    ModuleHoms,
    PsFormula,
    All,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::Manin,
        Check::Cybe,
        Check::Cobracket,
        Check::Qybe,
        Check::Decomposition,
        Check::Lemmas,
        Check::Relations,
        Check::Representations,
        Check::Pbw,
        Check::ClassicalLimit,
        Check::CobracketLimit,
        Check::Brauer,
        Check::ModuleHoms,
        Check::PsFormula,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Manin => "manin",
            Check::Cybe => "cybe",
            Check::Cobracket => "cobracket",
            Check::Qybe => "qybe",
            Check::Decomposition => "decomposition",
            Check::Lemmas => "lemmas",
            Check::Relations => "relations",
            Check::Representations => "representations",
            Check::Pbw => "pbw",
            Check::ClassicalLimit => "classical-limit",
            Check::CobracketLimit => "cobracket-limit",
            Check::Brauer => "brauer",
            Check::ModuleHoms => "module-homs",
            Check::PsFormula => "ps-formula",
            Check::All => "all",
        }
    }

    fn expand(self) -> Vec<Check> {
        if self == Check::All {
            Check::ALL.to_vec()
        } else {
            vec![self]
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .iter()
            .chain([Check::All].iter())
            .find(|c| c.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

/// Settings for one suite run. `n` and `l` are upper bounds: each check runs
/// for every `1 ≤ n' ≤ n` and, where legs matter, every `2 ≤ l' ≤ l`.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub l: usize,
    pub mode: Mode,
    pub seed: u64,
    pub format: OutputFormat,
    pub cache_dir: Option<PathBuf>,
    /// Directory receiving one JSON file per report.
    pub out_dir: Option<PathBuf>,
    pub timings: bool,
}

impl RunConfig {
    pub fn new(n: usize, l: usize) -> Self {
        RunConfig { n, l, mode: Mode::Symbolic, seed: 0, format: OutputFormat::Text, cache_dir: None, out_dir: None, timings: false }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.l == 0 {
            return Err(Error::Parse("bounds must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub reports: Vec<VerificationReport>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    /// `0` when every report passes, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.reports).expect("reports serialize")
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json_string(),
            OutputFormat::Text => {
                let mut lines: Vec<String> = self.reports.iter().map(|r| r.text_line()).collect();
                let failed = self.reports.iter().filter(|r| !r.pass).count();
                lines.push(format!("{} reports, {} failed", self.reports.len(), failed));
                lines.join("\n")
            }
        }
    }
}

fn run_one(check: Check, cfg: &RunConfig) -> Vec<VerificationReport> {
    let ns = 1..=cfg.n;
    let ls = 2..=cfg.l.max(2);
    let mut out = Vec::new();
    for n in ns {
        match check {
            Check::Manin => out.push(verify_manin_triple(n)),
            Check::Cybe => out.push(verify_cybe(n)),
            Check::Cobracket => out.push(verify_cobracket_via_s(n)),
            Check::Qybe => out.push(verify_qybe(n, cfg.mode, cfg.seed)),
            Check::Decomposition => out.push(verify_decomposition(n)),
            Check::Lemmas => out.push(verify_proof_lemmas(n)),
            Check::Relations => out.push(verify_relations(n, cfg.mode, cfg.seed)),
            Check::Representations => out.push(verify_representations(n, cfg.l)),
            Check::Pbw => out.push(verify_pbw(n, cfg.l, cfg.seed)),
            Check::ClassicalLimit => out.push(verify_classical_limit(n)),
            Check::CobracketLimit => out.push(verify_cobracket_limit(n)),
            Check::Brauer => {
                for l in ls.clone() {
                    out.push(verify_brauer(n, l));
                    out.push(verify_q1_degeneration(n, l));
                }
            }
            Check::ModuleHoms => out.push(verify_module_homs(n)),
            Check::PsFormula => out.push(verify_ps_formula(n)),
            Check::All => unreachable!("expanded before running"),
        }
    }
    out
}

/// Runs the selected checks in order and writes report files if requested.
pub fn run_suite(cfg: &RunConfig, checks: &[Check]) -> Result<SuiteOutcome> {
    cfg.validate()?;
    let mut list: Vec<Check> = checks.iter().flat_map(|c| c.expand()).collect();
    list.dedup();
    let mut reports = Vec::new();
    for c in list {
        let start = Instant::now();
        let mut rs = run_one(c, cfg);
        if cfg.timings {
            let ms = start.elapsed().as_millis() as u64;
            let per = ms / rs.len().max(1) as u64;
            for r in &mut rs {
                r.elapsed_ms = Some(per);
            }
        }
        reports.extend(rs);
    }
    if let Some(dir) = &cfg.out_dir {
        fs::create_dir_all(dir)?;
        for r in &reports {
            write_atomic(&dir.join(report_file_name(r)), r.to_json_string().as_bytes())?;
        }
    }
    Ok(SuiteOutcome { reports })
}

/// `check-key=value-....json`, with the parameters in sorted order.
pub fn report_file_name(r: &VerificationReport) -> String {
    let mut s = r.check.clone();
    for (k, v) in &r.params {
        let v = match v {
            Value::String(x) => x.clone(),
            other => other.to_string(),
        };
        s.push_str(&format!("_{k}-{v}"));
    }
    s.retain(|c| c.is_ascii_alphanumeric() || "-_".contains(c));
    s + ".json"
}

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let tmp = dir.join(format!(".{}.tmp{}", path.file_name().and_then(|f| f.to_str()).unwrap_or("out"), std::process::id()));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Code version that stored cache entries must match.
pub const CACHE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+1");

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    version: String,
    kind: String,
    n: usize,
    l: usize,
    object: Value,
}

/// JSON cache keyed by object kind, `n`, `l` and code version.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
    version: String,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self::with_version(dir, CACHE_VERSION)
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: &str) -> Self {
        Cache { dir: dir.into(), version: version.to_string() }
    }

    /// The cache named by `PQ_CACHE_DIR`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os("PQ_CACHE_DIR").filter(|v| !v.is_empty()).map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, kind: &str, n: usize, l: usize) -> PathBuf {
        self.dir.join(format!("{kind}-n{n}-l{l}.json"))
    }

    /// Stored object, or `None` when absent, stale or corrupt.
    pub fn get(&self, kind: &str, n: usize, l: usize) -> Option<Value> {
        let path = self.path(kind, n, l);
        let text = fs::read_to_string(&path).ok()?;
        match serde_json::from_str::<CacheEntry>(&text) {
            Ok(e) if e.version == self.version && e.kind == kind && e.n == n && e.l == l => Some(e.object),
            Ok(_) => None,
            Err(err) => {
                eprintln!("warning: discarding corrupt cache entry {}: {err}", path.display());
                let _ = fs::remove_file(&path);
                None
            }
        }
    }

    pub fn put(&self, kind: &str, n: usize, l: usize, object: Value) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry { version: self.version.clone(), kind: kind.to_string(), n, l, object };
        write_atomic(&self.path(kind, n, l), serde_json::to_string(&entry)?.as_bytes())
    }

    pub fn get_operator(&self, kind: &str, n: usize, l: usize) -> Option<GradedOperator> {
        let v = self.get(kind, n, l)?;
        match GradedOperator::from_json(&v) {
            Ok(op) => Some(op),
            Err(err) => {
                eprintln!("warning: cached {kind} for n={n} does not decode: {err}");
                None
            }
        }
    }

    pub fn put_operator(&self, kind: &str, n: usize, l: usize, op: &GradedOperator) -> Result<()> {
        self.put(kind, n, l, op.to_json())
    }

    pub fn get_relations(&self, n: usize) -> Option<RelationSet> {
        let v = self.get("relations", n, 0)?;
        match RelationSet::from_json(&v) {
            Ok(r) if r.n == n => Some(r),
            Ok(_) => None,
            Err(err) => {
                eprintln!("warning: cached relations for n={n} do not decode: {err}");
                None
            }
        }
    }

    pub fn put_relations(&self, rels: &RelationSet) -> Result<()> {
        self.put("relations", rels.n, 0, rels.to_json())
    }
}

/// `S`, read from the cache when possible.
pub fn cached_s_matrix(cache: Option<&Cache>, n: usize) -> SMatrix {
    if let Some(op) = cache.and_then(|c| c.get_operator("smatrix", n, 2)) {
        return SMatrix { n, op };
    }
    let s = build_s(n);
    if let Some(c) = cache {
        if let Err(e) = c.put_operator("smatrix", n, 2, &s.op) {
            eprintln!("warning: could not write cache: {e}");
        }
    }
    s
}

/// The extracted relations, read from the cache when possible.
pub fn cached_relations(cache: Option<&Cache>, n: usize) -> RelationSet {
    if let Some(r) = cache.and_then(|c| c.get_relations(n)) {
        return r;
    }
    let r = extract_relations(n);
    if let Some(c) = cache {
        if let Err(e) = c.put_relations(&r) {
            eprintln!("warning: could not write cache: {e}");
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL.iter().chain([Check::All].iter()) {
            assert_eq!(c.name().parse::<Check>().unwrap(), *c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn cache_round_trip_and_invalidation() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let s = build_s(1);
        cache.put_operator("smatrix", 1, 2, &s.op).unwrap();
        assert_eq!(cache.get_operator("smatrix", 1, 2).unwrap(), s.op);
        assert_eq!(cached_s_matrix(Some(&cache), 1), s);

        let bumped = Cache::with_version(dir.path(), "0.0.0-other");
        assert!(bumped.get("smatrix", 1, 2).is_none());

        let rels = cached_relations(Some(&cache), 1);
        assert_eq!(cache.get_relations(1).unwrap(), rels);

        fs::write(dir.path().join("smatrix-n1-l2.json"), "{ not json").unwrap();
        assert!(cache.get_operator("smatrix", 1, 2).is_none());
        assert!(!dir.path().join("smatrix-n1-l2.json").exists());
    }

    #[test]
    fn small_suite_passes_and_is_deterministic() {
        let cfg = RunConfig::new(1, 2);
        let a = run_suite(&cfg, &[Check::All]).unwrap();
        assert_eq!(a.exit_code(), 0, "{}", a.render(OutputFormat::Text));
        let b = run_suite(&cfg, &[Check::All]).unwrap();
        assert_eq!(a.to_json_string(), b.to_json_string());
    }
}

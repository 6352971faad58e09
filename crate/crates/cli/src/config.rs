//! Run configuration: a flat `key = value` file merged with command-line
//! overrides.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use wbcu::analysis::StudyMode;
use wbcu::flux1d::CutoffParams;
use wbcu::{Execution, GasParams, PsiScale, Scheme, SolverConfig};

use crate::error::CliError;

pub const KEYS: [&str; 17] = [
    "problem", "mode", "n", "nx", "ny", "theta", "cfl", "gamma", "cutoff_c", "cutoff_m", "psi_scale", "t_final", "eta",
    "out_dir", "snap_times", "study", "exec",
];

/// Parses `key = value` lines. Blank lines and `#` comments are skipped.
pub fn parse_kv(text: &str, origin: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("{origin}:{}: expected key = value", i + 1)))?;
        let k = k.trim();
        if !KEYS.contains(&k) {
            return Err(CliError::Usage(format!("{origin}:{}: unknown key '{k}'", i + 1)));
        }
        out.insert(k.to_string(), v.trim().to_string());
    }
    Ok(out)
}

pub fn read_config_file(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_kv(&text, &path.display().to_string())
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub problem: String,
    pub mode: Scheme,
    /// resolutions; a single entry for `run`
    pub n: Vec<usize>,
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    pub theta: f64,
    pub cfl: f64,
    pub gamma: f64,
    pub cutoff: CutoffParams,
    pub psi_scale: PsiScale,
    pub t_final: Option<f64>,
    pub eta: Option<f64>,
    pub out_dir: Option<PathBuf>,
    pub snap_times: Vec<f64>,
    pub study: StudyMode,
    pub exec: Execution,
}

fn parse<T: FromStr>(key: &str, v: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    v.parse().map_err(|e| CliError::Usage(format!("{key} = '{v}': {e}")))
}

fn parse_list<T: FromStr>(key: &str, v: &str) -> Result<Vec<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(|s| parse(key, s)).collect()
}

impl RunConfig {
    pub fn from_map(map: &BTreeMap<String, String>) -> Result<Self, CliError> {
        let get = |k: &str| map.get(k).map(String::as_str);
        let problem = get("problem").ok_or_else(|| CliError::Usage("missing key 'problem'".into()))?.to_string();
        let mut cutoff = CutoffParams::default();
        if let Some(v) = get("cutoff_c") {
            cutoff.c = parse("cutoff_c", v)?;
        }
        if let Some(v) = get("cutoff_m") {
            cutoff.m = parse("cutoff_m", v)?;
        }
        let exec = match get("exec") {
            None => Execution::default(),
            Some("serial") => Execution::Serial,
            Some("parallel") => Execution::Parallel,
            Some(v) => return Err(CliError::Usage(format!("exec = '{v}': expected serial|parallel"))),
        };
        let cfg = RunConfig {
            problem,
            mode: get("mode").map(|v| parse("mode", v)).transpose()?.unwrap_or_default(),
            n: get("n").map(|v| parse_list("n", v)).transpose()?.unwrap_or_default(),
            nx: get("nx").map(|v| parse("nx", v)).transpose()?,
            ny: get("ny").map(|v| parse("ny", v)).transpose()?,
            theta: get("theta").map(|v| parse("theta", v)).transpose()?.unwrap_or(wbcu::config::DEFAULT_THETA),
            cfl: get("cfl").map(|v| parse("cfl", v)).transpose()?.unwrap_or(wbcu::config::DEFAULT_CFL),
            gamma: get("gamma").map(|v| parse("gamma", v)).transpose()?.unwrap_or(1.4),
            cutoff,
            psi_scale: get("psi_scale").map(|v| parse("psi_scale", v)).transpose()?.unwrap_or_default(),
            t_final: get("t_final").map(|v| parse("t_final", v)).transpose()?,
            eta: get("eta").map(|v| parse("eta", v)).transpose()?,
            out_dir: get("out_dir").map(PathBuf::from),
            snap_times: get("snap_times").map(|v| parse_list("snap_times", v)).transpose()?.unwrap_or_default(),
            study: get("study").map(|v| parse("study", v)).transpose()?.unwrap_or(StudyMode::SelfConvergence),
            exec,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.n.contains(&0) || self.nx == Some(0) || self.ny == Some(0) {
            return Err(CliError::Usage("resolutions must be positive".into()));
        }
        if let Some(t) = self.t_final {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(CliError::Usage(format!("t_final = {t} must be non-negative")));
            }
        }
        self.solver_config()?;
        Ok(())
    }

    pub fn solver_config(&self) -> Result<SolverConfig, CliError> {
        let cfg = SolverConfig {
            gas: GasParams::new(self.gamma)?,
            theta: self.theta,
            cutoff: self.cutoff,
            scheme: self.mode,
            psi_scale: self.psi_scale,
            exec: self.exec,
        };
        cfg.validate()?;
        cfg.cutoff.validate()?;
        Ok(cfg)
    }
}

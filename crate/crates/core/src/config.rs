//! Solver parameters.

use crate::eos::GasParams;
use crate::error::{Error, Result};
use crate::flux1d::CutoffParams;
use crate::par::Execution;

pub const DEFAULT_THETA: f64 = 1.3;
pub const DEFAULT_CFL: f64 = 0.4;
pub const DEFAULT_MAX_STEPS: usize = 10_000_000;

/// Which finite-volume scheme evaluates the right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scheme {
    /// Equilibrium-variable reconstruction with the cutoff-weighted fluxes.
    #[default]
    WellBalanced,
    /// Plain central-upwind scheme on the conservative variables.
    Baseline,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::WellBalanced => "wb",
            Scheme::Baseline => "baseline",
        }
    }
}

impl std::str::FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wb" | "well-balanced" => Ok(Scheme::WellBalanced),
            "baseline" | "nwb" | "non-wb" => Ok(Scheme::Baseline),
            _ => Err(Error::InvalidParameter(format!("unknown scheme mode '{s}' (expected wb|baseline)"))),
        }
    }
}

/// Normalisation of the 2-D steadiness indicator: the larger equilibrium
/// value of the two adjacent cells, or the maximum over the whole grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PsiScale {
    #[default]
    Local,
    Global,
}

impl std::str::FromStr for PsiScale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "local" => Ok(PsiScale::Local),
            "global" => Ok(PsiScale::Global),
            _ => Err(Error::InvalidParameter(format!("unknown psi_scale '{s}' (expected local|global)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeControls {
    pub cfl: f64,
    pub t_final: f64,
    pub max_steps: usize,
}

impl TimeControls {
    pub fn new(cfl: f64, t_final: f64) -> Result<Self> {
        let c = Self { cfl, t_final, max_steps: DEFAULT_MAX_STEPS };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.cfl > 0.0 && self.cfl < 1.0) {
            return Err(Error::InvalidParameter(format!("cfl = {} must lie in (0, 1)", self.cfl)));
        }
        if !(self.t_final >= 0.0 && self.t_final.is_finite()) {
            return Err(Error::InvalidParameter(format!("t_final = {} must be non-negative", self.t_final)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub gas: GasParams,
    pub theta: f64,
    pub cutoff: CutoffParams,
    pub scheme: Scheme,
    pub psi_scale: PsiScale,
    pub exec: Execution,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            gas: GasParams::default(),
            theta: DEFAULT_THETA,
            cutoff: CutoffParams::default(),
            scheme: Scheme::WellBalanced,
            psi_scale: PsiScale::Local,
            exec: Execution::default(),
        }
    }
}

impl SolverConfig {
    pub fn with_scheme(mut self, scheme: Scheme) -> Self {
        self.scheme = scheme;
        self
    }

    pub fn with_exec(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(1.0..=2.0).contains(&self.theta) {
            return Err(Error::InvalidParameter(format!("theta = {} must lie in [1, 2]", self.theta)));
        }
        Ok(())
    }
}

//! Initial data, potentials and boundaries of the benchmark problems.

use std::str::FromStr;

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::evolution::{BoundaryKind, BoundarySpec, Solver1D, Solver2D};
use crate::gravity::{steady_state_1d, steady_state_2d};
use crate::grid::{Grid1D, Grid2D};
use crate::potential::Potential;
use crate::state::{ConservedState1D, ConservedState2D};

/// Names accepted on the command line.
pub const PROBLEM_NAMES: [&str; 6] =
    ["sod", "isothermal-linear", "isothermal-quadratic", "isothermal-sine", "isothermal-2d", "explosion"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialKind {
    /// `phi = y`
    Linear,
    /// `phi = y^2 / 2`
    Quadratic,
    /// `phi = sin(2 pi y)`
    Sine,
}

impl PotentialKind {
    pub fn potential(self) -> Potential {
        match self {
            PotentialKind::Linear => Potential::Linear { gx: 0.0, gy: 1.0 },
            PotentialKind::Quadratic => Potential::HalfSquare,
            PotentialKind::Sine => Potential::Sine,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Init1D {
    Sod,
    /// discrete isothermal steady state with `L = 1` plus a Gaussian
    /// pressure bump `eta * exp(-width * (y - center)^2)`
    Isothermal { eta: f64, center: f64, width: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Init2D {
    /// discrete steady state for `phi = x + y` plus the Gaussian bump
    /// `eta * exp(-121 ((x - 0.3)^2 + (y - 0.3)^2))`
    Isothermal { eta: f64 },
    Explosion,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Problem1D {
    pub name: &'static str,
    pub potential: Potential,
    pub y_range: (f64, f64),
    pub bc: BoundarySpec,
    pub t_final: f64,
    pub default_n: usize,
    pub snap_times: Vec<f64>,
    pub init: Init1D,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Problem2D {
    pub name: &'static str,
    pub potential: Potential,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub bc: BoundarySpec,
    pub t_final: f64,
    pub default_n: (usize, usize),
    pub snap_times: Vec<f64>,
    pub init: Init2D,
}

/// A problem instantiated on a grid.
#[derive(Debug, Clone)]
pub struct Case1D {
    pub solver: Solver1D,
    pub initial: ConservedState1D,
    /// the unperturbed discrete steady state, where one exists
    pub steady: Option<ConservedState1D>,
}

#[derive(Debug, Clone)]
pub struct Case2D {
    pub solver: Solver2D,
    pub initial: ConservedState2D,
    pub steady: Option<ConservedState2D>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Problem {
    OneD(Problem1D),
    TwoD(Problem2D),
}

impl Problem {
    /// Looks a problem up by its command-line name. `eta` overrides the
    /// perturbation amplitude of the isothermal problems.
    pub fn by_name(name: &str, eta: Option<f64>) -> Result<Self> {
        if let Some(e) = eta {
            if !(e >= 0.0 && e.is_finite()) {
                return Err(Error::InvalidParameter(format!("eta = {e} must be non-negative")));
            }
        }
        let p = match name {
            "sod" => Problem::OneD(sod_tube()),
            "isothermal-linear" => Problem::OneD(isothermal_1d(PotentialKind::Linear, eta.unwrap_or(1e-2))),
            "isothermal-quadratic" => Problem::OneD(isothermal_1d(PotentialKind::Quadratic, eta.unwrap_or(1e-3))),
            "isothermal-sine" => Problem::OneD(isothermal_1d(PotentialKind::Sine, eta.unwrap_or(1e-3))),
            "isothermal-2d" => Problem::TwoD(isothermal_2d(eta.unwrap_or(1e-6))),
            "explosion" => Problem::TwoD(explosion_2d()),
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unknown problem '{name}' (expected one of {})",
                    PROBLEM_NAMES.join(", ")
                )))
            }
        };
        Ok(p)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Problem::OneD(p) => p.name,
            Problem::TwoD(p) => p.name,
        }
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Problem::by_name(s, None)
    }
}

/// Shock tube in the field `phi = y`.
pub fn sod_tube() -> Problem1D {
    Problem1D {
        name: "sod",
        potential: Potential::Linear { gx: 0.0, gy: 1.0 },
        y_range: (0.0, 1.0),
        bc: BoundarySpec::uniform(BoundaryKind::Reflecting),
        t_final: 0.2,
        default_n: 100,
        snap_times: vec![],
        init: Init1D::Sod,
    }
}

pub fn isothermal_1d(kind: PotentialKind, eta: f64) -> Problem1D {
    let name = match kind {
        PotentialKind::Linear => "isothermal-linear",
        PotentialKind::Quadratic => "isothermal-quadratic",
        PotentialKind::Sine => "isothermal-sine",
    };
    Problem1D {
        name,
        potential: kind.potential(),
        y_range: (0.0, 1.0),
        bc: BoundarySpec::uniform(BoundaryKind::HydrostaticZeroOrder),
        t_final: 0.25,
        default_n: 200,
        snap_times: vec![],
        init: Init1D::Isothermal { eta, center: 0.5, width: 100.0 },
    }
}

pub fn isothermal_2d(eta: f64) -> Problem2D {
    Problem2D {
        name: "isothermal-2d",
        potential: Potential::Linear { gx: 1.0, gy: 1.0 },
        x_range: (0.0, 1.0),
        y_range: (0.0, 1.0),
        bc: BoundarySpec::uniform(BoundaryKind::ZeroOrder),
        t_final: 0.15,
        default_n: (100, 100),
        snap_times: vec![],
        init: Init2D::Isothermal { eta },
    }
}

pub fn explosion_2d() -> Problem2D {
    Problem2D {
        name: "explosion",
        potential: Potential::Linear { gx: 0.0, gy: 0.118 },
        x_range: (0.0, 3.0),
        y_range: (0.0, 3.0),
        bc: BoundarySpec::uniform(BoundaryKind::ZeroOrder),
        t_final: 2.4,
        default_n: (101, 101),
        snap_times: vec![1.2, 1.8, 2.4],
        init: Init2D::Explosion,
    }
}

fn conservative_1d(
    solver: &Solver1D,
    rho: impl Fn(f64) -> f64,
    v: impl Fn(f64) -> f64,
    p: impl Fn(f64) -> f64,
) -> ConservedState1D {
    let g = &solver.grid;
    let gas = &solver.config.gas;
    let mut q = ConservedState1D::zeros(g);
    for s in 0..g.storage_len() {
        let y = g.storage_center(s);
        let (r, vel) = (rho(y), v(y));
        q.rho[s] = r;
        q.mom[s] = r * vel;
        q.etot[s] = gas.energy(r, vel * vel, p(y)) + r * solver.phi.center[s];
    }
    q
}

impl Problem1D {
    pub fn grid(&self, n: usize) -> Result<Grid1D> {
        Grid1D::new(self.y_range.0, self.y_range.1, n)
    }

    pub fn setup(&self, n: usize, config: SolverConfig) -> Result<Case1D> {
        let solver = Solver1D::new(self.grid(n)?, &self.potential, self.bc, config)?;
        match self.init {
            Init1D::Sod => {
                let left = |y: f64| y <= 0.5;
                let initial = conservative_1d(
                    &solver,
                    |y| if left(y) { 1.0 } else { 0.125 },
                    |_| 0.0,
                    |y| if left(y) { 1.0 } else { 0.1 },
                );
                Ok(Case1D { solver, initial, steady: None })
            }
            Init1D::Isothermal { eta, center, width } => {
                let g = &solver.grid;
                let rho: Vec<f64> =
                    (0..n).map(|k| (-self.potential.value(0.0, g.center(k as isize))).exp()).collect();
                let steady = steady_state_1d(&rho, 1.0, &solver.phi, g, &config.gas)?;
                let mut initial = steady.clone();
                if eta != 0.0 {
                    let gm1 = config.gas.gamma() - 1.0;
                    for s in g.interior() {
                        let y = g.storage_center(s);
                        initial.etot[s] += eta * (-width * (y - center).powi(2)).exp() / gm1;
                    }
                }
                Ok(Case1D { solver, initial, steady: Some(steady) })
            }
        }
    }
}

impl Problem2D {
    pub fn grid(&self, nx: usize, ny: usize) -> Result<Grid2D> {
        Grid2D::new(self.x_range, self.y_range, nx, ny)
    }

    pub fn setup(&self, nx: usize, ny: usize, config: SolverConfig) -> Result<Case2D> {
        let solver = Solver2D::new(self.grid(nx, ny)?, &self.potential, self.bc, config)?;
        let g = &solver.grid;
        let gas = &config.gas;
        let gm1 = gas.gamma() - 1.0;
        match self.init {
            Init2D::Isothermal { eta } => {
                // L_j = exp(-1.21 x_j); K_k in the right-edge normalisation
                let x_right = g.x_bounds().1;
                let l: Vec<f64> = (0..nx).map(|j| (-1.21 * g.xc(j as isize)).exp()).collect();
                let k: Vec<f64> = (0..ny).map(|k| (-1.21 * (x_right + g.yc(k as isize))).exp()).collect();
                let steady = steady_state_2d(&l, &k, &solver.phi, g, gas)?;
                let mut initial = steady.clone();
                if eta != 0.0 {
                    for sj in 1..=nx {
                        for sk in 1..=ny {
                            let (x, y) = (g.storage_xc(sj), g.storage_yc(sk));
                            let bump = eta * (-121.0 * ((x - 0.3).powi(2) + (y - 0.3).powi(2))).exp();
                            initial.etot[[sj, sk]] += bump / gm1;
                        }
                    }
                }
                Ok(Case2D { solver, initial, steady: Some(steady) })
            }
            Init2D::Explosion => {
                let mut q = ConservedState2D::zeros(g);
                for ((sj, sk), r) in q.rho.indexed_iter_mut() {
                    let (x, y) = (g.storage_xc(sj), g.storage_yc(sk));
                    let phi = solver.phi.center[[sj, sk]];
                    let inside = (x - 1.5).powi(2) + (y - 1.5).powi(2) < 0.01;
                    let p = 1.0 - phi + if inside { 0.005 } else { 0.0 };
                    *r = 1.0;
                    q.etot[[sj, sk]] = gas.energy(1.0, 0.0, p) + phi;
                }
                Ok(Case2D { solver, initial: q, steady: None })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pressure_1d(case: &Case1D, s: usize) -> f64 {
        let q = &case.initial;
        let e = q.etot[s] - q.rho[s] * case.solver.phi.center[s];
        case.solver.config.gas.pressure(q.rho[s], q.mom[s] * q.mom[s], e)
    }

    #[test]
    fn sod_states_and_mass() {
        let case = sod_tube().setup(100, SolverConfig::default()).unwrap();
        let q = &case.initial;
        let e_left = q.etot[1] - q.rho[1] * case.solver.phi.center[1];
        let e_right = q.etot[100] - q.rho[100] * case.solver.phi.center[100];
        assert!((e_left - 2.5).abs() < 1e-14);
        assert!((e_right - 0.25).abs() < 1e-14);
        let mass: f64 = q.interior(0).iter().sum::<f64>() * case.solver.grid.dy();
        assert!((mass - 0.5625).abs() < 1e-14);
    }

    #[test]
    fn isothermal_bump_is_exact() {
        let eta = 1e-2;
        let p = isothermal_1d(PotentialKind::Linear, eta);
        let pert = p.setup(101, SolverConfig::default()).unwrap();
        let base = isothermal_1d(PotentialKind::Linear, 0.0).setup(101, SolverConfig::default()).unwrap();
        // cell 50 is centred on y = 0.5
        let bump = pressure_1d(&pert, 51) - pressure_1d(&base, 51);
        assert!((bump - eta).abs() < 1e-14);
        for s in 1..=101 {
            let y = pert.solver.grid.storage_center(s);
            let d = pressure_1d(&pert, s) - pressure_1d(&base, s);
            assert!((d - eta * (-100.0 * (y - 0.5f64).powi(2)).exp()).abs() < 1e-14);
        }
        assert_eq!(base.steady.as_ref().unwrap(), &base.initial);
    }

    #[test]
    fn isothermal_2d_corner_density() {
        let case = isothermal_2d(0.0).setup(100, 100, SolverConfig::default()).unwrap();
        let rho = case.initial.rho[[1, 1]];
        assert!((rho - 1.21 * (-1.21f64 * 0.01).exp()).abs() < 1e-5, "{rho}");
        // right-to-left sweep evaluated independently
        assert!((rho - 1.195_454_514_602_8).abs() < 1e-12, "{rho}");
    }

    #[test]
    fn explosion_pressures() {
        let case = explosion_2d().setup(101, 101, SolverConfig::default()).unwrap();
        let g = &case.solver.grid;
        let gas = case.solver.config.gas;
        let p = |sj: usize, sk: usize| {
            let q = &case.initial;
            gas.pressure(1.0, 0.0, q.etot[[sj, sk]] - case.solver.phi.center[[sj, sk]])
        };
        // cell 50 is centred on 1.5
        assert!((g.storage_xc(51) - 1.5).abs() < 1e-14);
        assert!((p(51, 51) - 0.828).abs() < 1e-14);
        let corner = 1.0 - 0.118 * g.storage_yc(101);
        assert!((p(1, 101) - corner).abs() < 1e-14);
        assert!((1.0 - 0.118 * 3.0 - 0.646f64).abs() < 1e-14);
    }

    #[test]
    fn lookup_by_name() {
        for name in PROBLEM_NAMES {
            assert_eq!(Problem::by_name(name, None).unwrap().name(), name);
        }
        assert!(Problem::by_name("nope", None).is_err());
        assert!(Problem::by_name("sod", Some(-1.0)).is_err());
        match Problem::by_name("isothermal-sine", None).unwrap() {
            Problem::OneD(p) => assert_eq!(p.init, Init1D::Isothermal { eta: 1e-3, center: 0.5, width: 100.0 }),
            _ => unreachable!(),
        }
    }
}

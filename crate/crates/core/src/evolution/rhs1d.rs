use crate::config::SolverConfig;
use crate::error::{Error, Location, Result};
use crate::evolution::boundary::{fill_ghosts_1d, BoundarySpec};
use crate::evolution::run::SemiDiscrete;
use crate::evolution::timestep::stable_dt_1d;
use crate::flux1d::interface_fluxes_1d;
use crate::gravity::{compute_r_1d, EquilibriumField1D};
use crate::grid::Grid1D;
use crate::potential::{Potential, PotentialField1D};
use crate::reconstruction::interface_values_1d;
use crate::state::ConservedState1D;

/// Grid, sampled potential, boundaries and scheme parameters of a 1-D run.
#[derive(Debug, Clone)]
pub struct Solver1D {
    pub grid: Grid1D,
    pub phi: PotentialField1D,
    pub bc: BoundarySpec,
    pub config: SolverConfig,
}

#[derive(Debug, Clone)]
pub struct Rhs1D {
    /// time derivative of the cell averages; ghost entries are zero
    pub dqdt: ConservedState1D,
    /// numerical flux at each of the `n + 1` interfaces
    pub fluxes: Vec<[f64; 3]>,
    pub max_speed: f64,
}

impl Solver1D {
    pub fn new(grid: Grid1D, potential: &Potential, bc: BoundarySpec, config: SolverConfig) -> Result<Self> {
        config.validate()?;
        config.cutoff.validate()?;
        let phi = PotentialField1D::sample(potential, &grid);
        Ok(Self { grid, phi, bc, config })
    }

    /// Interior pressures (storage-indexed; ghosts zero).
    pub fn pressures(&self, state: &ConservedState1D) -> Result<Vec<f64>> {
        let gas = &self.config.gas;
        let mut p = vec![0.0; self.grid.storage_len()];
        for s in self.grid.interior() {
            let e = state.etot[s] - state.rho[s] * self.phi.center[s];
            p[s] = gas.pressure(state.rho[s], state.mom[s] * state.mom[s], e);
            if !(p[s] > 0.0) {
                return Err(Error::NonPositivePressure { at: Location::Cell(s as isize - 1), value: p[s] });
            }
        }
        Ok(p)
    }

    /// `R` and `L` from the current cell averages (ghost entries of `L`
    /// not yet filled).
    pub fn equilibrium(&self, state: &ConservedState1D) -> Result<EquilibriumField1D> {
        state.check_density(&self.grid)?;
        let p = self.pressures(state)?;
        let (r_iface, r_center) = compute_r_1d(&state.rho, &self.phi, &self.grid);
        Ok(EquilibriumField1D::assemble(r_iface, r_center, &p))
    }
}

pub fn semidiscrete_rhs_1d(state: &ConservedState1D, solver: &Solver1D) -> Result<Rhs1D> {
    state.check_extents(&solver.grid)?;
    let grid = &solver.grid;
    let cfg = &solver.config;
    let mut eq = solver.equilibrium(state)?;
    let mut work = state.clone();
    let halo = fill_ghosts_1d(&mut work, &mut eq.l_center, &solver.bc, &solver.phi, grid, &cfg.gas);
    let iv = interface_values_1d(&work, &eq, &solver.phi, grid, &cfg.gas, cfg.theta, cfg.scheme, Some(&halo))?;
    let (fluxes, speeds) =
        interface_fluxes_1d(&iv, &eq.l_center, grid, &cfg.gas, &cfg.cutoff, cfg.scheme, cfg.exec)?;
    let dy = grid.dy();
    let mut dqdt = ConservedState1D::zeros(grid);
    for s in grid.interior() {
        let (lo, hi) = (&fluxes[s - 1], &fluxes[s]);
        dqdt.rho[s] = -(hi[0] - lo[0]) / dy;
        dqdt.mom[s] = -(hi[1] - lo[1]) / dy;
        dqdt.etot[s] = -(hi[2] - lo[2]) / dy;
    }
    let max_speed = speeds.iter().fold(0.0f64, |m, sp| m.max(sp.max_abs()));
    Ok(Rhs1D { dqdt, fluxes, max_speed })
}

impl SemiDiscrete for Solver1D {
    type State = ConservedState1D;

    fn rhs(&self, q: &ConservedState1D) -> Result<(ConservedState1D, Option<f64>)> {
        let r = semidiscrete_rhs_1d(q, self)?;
        Ok((r.dqdt, stable_dt_1d(r.max_speed, self.grid.dy(), 1.0)))
    }

    fn validate(&self, q: &ConservedState1D) -> Result<()> {
        q.check_density(&self.grid)?;
        self.pressures(q).map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Scheme;
    use crate::evolution::BoundaryKind;
    use crate::gravity::steady_state_1d;

    fn isothermal(n: usize, scheme: Scheme) -> (Solver1D, ConservedState1D) {
        let grid = Grid1D::new(0.0, 1.0, n).unwrap();
        let pot = Potential::Linear { gx: 0.0, gy: 1.0 };
        let cfg = SolverConfig::default().with_scheme(scheme);
        let solver = Solver1D::new(grid, &pot, BoundarySpec::uniform(BoundaryKind::HydrostaticZeroOrder), cfg).unwrap();
        let rho: Vec<f64> = (0..n).map(|k| (-solver.grid.center(k as isize)).exp()).collect();
        let q = steady_state_1d(&rho, 1.0, &solver.phi, &solver.grid, &cfg.gas).unwrap();
        (solver, q)
    }

    #[test]
    fn wb_rhs_vanishes_on_steady_state() {
        let (solver, q) = isothermal(50, Scheme::WellBalanced);
        let r = semidiscrete_rhs_1d(&q, &solver).unwrap();
        for f in &r.fluxes {
            assert!(f[0].abs() < 1e-15);
            assert!((f[1] - 1.0).abs() < 1e-15);
            assert!(f[2].abs() < 1e-15);
        }
        let m = r.dqdt.rho.iter().chain(&r.dqdt.mom).chain(&r.dqdt.etot).fold(0.0f64, |a, b| a.max(b.abs()));
        assert!(m < 1e-12, "{m}");
    }

    #[test]
    fn baseline_rhs_is_second_order_small() {
        let norm = |n: usize| {
            let (solver, q) = isothermal(n, Scheme::Baseline);
            let r = semidiscrete_rhs_1d(&q, &solver).unwrap();
            solver.grid.interior().map(|s| r.dqdt.mom[s].abs()).fold(0.0f64, f64::max)
        };
        let (a, b) = (norm(50), norm(100));
        assert!(a > 1e-8);
        assert!(a / b > 3.0, "{a} {b}");
    }

    #[test]
    fn uniform_state_without_gravity_is_steady() {
        let grid = Grid1D::new(0.0, 1.0, 20).unwrap();
        let cfg = SolverConfig::default();
        let solver =
            Solver1D::new(grid, &Potential::Constant(0.0), BoundarySpec::uniform(BoundaryKind::ZeroOrder), cfg).unwrap();
        let mut q = ConservedState1D::zeros(&solver.grid);
        q.rho.fill(1.0);
        q.mom.fill(0.5);
        q.etot.fill(3.0);
        for scheme in [Scheme::WellBalanced, Scheme::Baseline] {
            let s = Solver1D { config: cfg.with_scheme(scheme), ..solver.clone() };
            let r = semidiscrete_rhs_1d(&q, &s).unwrap();
            assert!(r.dqdt.rho.iter().chain(&r.dqdt.mom).chain(&r.dqdt.etot).all(|v| v.abs() < 1e-13));
        }
    }

    #[test]
    fn negative_pressure_is_located() {
        let (solver, mut q) = isothermal(10, Scheme::WellBalanced);
        q.etot[4] = 0.0;
        let err = semidiscrete_rhs_1d(&q, &solver).unwrap_err();
        assert!(matches!(err, Error::NonPositivePressure { at: Location::Cell(3), .. }));
    }
}

use ndarray::Array2;

use crate::config::SolverConfig;
use crate::error::{Error, Location, Result};
use crate::evolution::boundary::{fill_ghosts_2d, BoundarySpec};
use crate::evolution::run::SemiDiscrete;
use crate::evolution::timestep::stable_dt_2d;
use crate::flux2d::interface_fluxes_2d;
use crate::gravity::{compute_qr_2d, EquilibriumField2D};
use crate::grid::Grid2D;
use crate::potential::{Potential, PotentialField2D};
use crate::reconstruction::reconstruct_2d;
use crate::state::ConservedState2D;

#[derive(Debug, Clone)]
pub struct Solver2D {
    pub grid: Grid2D,
    pub phi: PotentialField2D,
    pub bc: BoundarySpec,
    pub config: SolverConfig,
}

#[derive(Debug, Clone)]
pub struct Rhs2D {
    pub dqdt: ConservedState2D,
    /// x-fluxes, shape `(nx + 1, ny)`
    pub flux_x: Array2<[f64; 4]>,
    /// y-fluxes, shape `(nx, ny + 1)`
    pub flux_y: Array2<[f64; 4]>,
    pub max_a: f64,
    pub max_b: f64,
}

impl Solver2D {
    pub fn new(grid: Grid2D, potential: &Potential, bc: BoundarySpec, config: SolverConfig) -> Result<Self> {
        config.validate()?;
        config.cutoff.validate()?;
        let phi = PotentialField2D::sample(potential, &grid);
        Ok(Self { grid, phi, bc, config })
    }

    pub fn pressures(&self, state: &ConservedState2D) -> Result<Array2<f64>> {
        let gas = self.config.gas;
        let (sx, sy) = self.grid.storage_shape();
        self.config.exec.try_map2((sx, sy), |sj, sk| {
            if sj == 0 || sk == 0 || sj == sx - 1 || sk == sy - 1 {
                return Ok(0.0);
            }
            let c = [sj, sk];
            let rho = state.rho[c];
            let mom_sq = state.mom_x[c] * state.mom_x[c] + state.mom_y[c] * state.mom_y[c];
            let p = gas.pressure(rho, mom_sq, state.etot[c] - rho * self.phi.center[c]);
            if p > 0.0 {
                Ok(p)
            } else {
                Err(Error::NonPositivePressure { at: Location::Cell2(sj as isize - 1, sk as isize - 1), value: p })
            }
        })
    }

    pub fn equilibrium(&self, state: &ConservedState2D) -> Result<EquilibriumField2D> {
        state.check_density(&self.grid)?;
        let p = self.pressures(state)?;
        let mut eq = compute_qr_2d(&state.rho, &self.phi, &self.grid, self.config.exec);
        eq.assemble_centers(&p);
        Ok(eq)
    }
}

pub fn semidiscrete_rhs_2d(state: &ConservedState2D, solver: &Solver2D) -> Result<Rhs2D> {
    state.check_extents(&solver.grid)?;
    let grid = &solver.grid;
    let cfg = &solver.config;
    let mut eq = solver.equilibrium(state)?;
    let mut work = state.clone();
    let halo = fill_ghosts_2d(&mut work, &mut eq.k_center, &mut eq.l_center, &solver.bc, &solver.phi, grid, &cfg.gas);
    let iv = reconstruct_2d(&work, &eq, &solver.phi, grid, &cfg.gas, cfg.theta, cfg.scheme, Some(&halo), cfg.exec)?;
    let (flux_x, flux_y, speeds) =
        interface_fluxes_2d(&iv, &eq, grid, &cfg.gas, &cfg.cutoff, cfg.scheme, cfg.psi_scale, cfg.exec)?;
    let (dx, dy) = (grid.dx(), grid.dy());
    let (sx, sy) = grid.storage_shape();
    let d = cfg.exec.map2((sx, sy), |sj, sk| {
        if sj == 0 || sk == 0 || sj == sx - 1 || sk == sy - 1 {
            return [0.0; 4];
        }
        let (j, k) = (sj - 1, sk - 1);
        let (w, e) = (&flux_x[[j, k]], &flux_x[[j + 1, k]]);
        let (s, n) = (&flux_y[[j, k]], &flux_y[[j, k + 1]]);
        std::array::from_fn(|c| -(e[c] - w[c]) / dx - (n[c] - s[c]) / dy)
    });
    let dqdt = ConservedState2D {
        rho: d.mapv(|v| v[0]),
        mom_x: d.mapv(|v| v[1]),
        mom_y: d.mapv(|v| v[2]),
        etot: d.mapv(|v| v[3]),
    };
    Ok(Rhs2D { dqdt, flux_x, flux_y, max_a: speeds.max_x(), max_b: speeds.max_y() })
}

impl SemiDiscrete for Solver2D {
    type State = ConservedState2D;

    fn rhs(&self, q: &ConservedState2D) -> Result<(ConservedState2D, Option<f64>)> {
        let r = semidiscrete_rhs_2d(q, self)?;
        Ok((r.dqdt, stable_dt_2d(r.max_a, r.max_b, self.grid.dx(), self.grid.dy(), 1.0)))
    }

    fn validate(&self, q: &ConservedState2D) -> Result<()> {
        q.check_density(&self.grid)?;
        self.pressures(q).map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::BoundaryKind;
    use crate::par::Execution;

    #[test]
    fn uniform_state_without_gravity_is_steady() {
        let grid = Grid2D::new((0.0, 1.0), (0.0, 2.0), 6, 5).unwrap();
        let solver = Solver2D::new(
            grid,
            &Potential::Constant(0.0),
            BoundarySpec::uniform(BoundaryKind::ZeroOrder),
            SolverConfig::default(),
        )
        .unwrap();
        let mut q = ConservedState2D::zeros(&solver.grid);
        q.rho.fill(1.0);
        q.mom_x.fill(0.3);
        q.mom_y.fill(-0.2);
        q.etot.fill(2.5);
        let r = semidiscrete_rhs_2d(&q, &solver).unwrap();
        for c in 0..4 {
            assert!(r.dqdt.component(c).iter().all(|v| v.abs() < 1e-13));
        }
    }

    #[test]
    fn serial_and_parallel_agree() {
        let grid = Grid2D::new((0.0, 1.0), (0.0, 1.0), 8, 7).unwrap();
        let pot = Potential::Linear { gx: 1.0, gy: 1.0 };
        let bc = BoundarySpec::uniform(BoundaryKind::ZeroOrder);
        let base = Solver2D::new(grid, &pot, bc, SolverConfig::default()).unwrap();
        let mut q = ConservedState2D::zeros(&base.grid);
        for ((sj, sk), r) in q.rho.indexed_iter_mut() {
            *r = 1.0 + 0.1 * ((sj * 3 + sk * 7) % 5) as f64;
        }
        q.etot.fill(4.0);
        let ser = Solver2D { config: base.config.with_exec(Execution::Serial), ..base.clone() };
        let par = Solver2D { config: base.config.with_exec(Execution::Parallel), ..base };
        let a = semidiscrete_rhs_2d(&q, &ser).unwrap();
        let b = semidiscrete_rhs_2d(&q, &par).unwrap();
        assert_eq!(a.dqdt, b.dqdt);
    }
}

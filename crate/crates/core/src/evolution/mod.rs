//! Ghost cells, semi-discrete right-hand sides, time step selection and the
//! SSP Runge-Kutta driver.

mod boundary;
mod rhs1d;
mod rhs2d;
mod rk;
mod run;
mod timestep;

pub use boundary::{fill_ghosts_1d, fill_ghosts_2d, BoundaryKind, BoundarySpec};
pub use rhs1d::{semidiscrete_rhs_1d, Rhs1D, Solver1D};
pub use rhs2d::{semidiscrete_rhs_2d, Rhs2D, Solver2D};
pub use rk::{ssp_rk3_step, ssp_rk3_step_with};
pub use run::{run, SemiDiscrete, Trajectory};
pub use timestep::{stable_dt_1d, stable_dt_2d};

//! Global variables `Q`, `R`, equilibrium variables `K = p + Q`, `L = p + R`,
//! and constructors for discrete motionless steady states.
//!
//! The integrals are accumulated with the midpoint rule in a fixed order
//! (left to right in x, bottom to top in y) so repeated evaluations are
//! bit-identical.

#![allow(clippy::needless_range_loop)]

use ndarray::Array2;

use crate::eos::GasParams;
use crate::error::{Error, Location, Result};
use crate::grid::{Grid1D, Grid2D};
use crate::par::Execution;
use crate::potential::{PotentialField1D, PotentialField2D};
use crate::state::{ConservedState1D, ConservedState2D};

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumField1D {
    /// R at the `n + 1` interfaces; the first entry is zero.
    pub r_iface: Vec<f64>,
    /// R at storage centres. Ghost entries repeat the boundary interface value.
    pub r_center: Vec<f64>,
    /// L = p + R at storage centres. Ghost entries are set by the boundary fill.
    pub l_center: Vec<f64>,
}

impl EquilibriumField1D {
    /// Assembles `L = p + R` at interior centres from centre pressures
    /// (storage-indexed; ghost entries are ignored).
    pub fn assemble(r_iface: Vec<f64>, r_center: Vec<f64>, p_center: &[f64]) -> Self {
        let n = r_iface.len() - 1;
        let mut l_center = vec![0.0; n + 2];
        for s in 1..=n {
            l_center[s] = p_center[s] + r_center[s];
        }
        Self { r_iface, r_center, l_center }
    }
}

/// Midpoint recursion for R on a 1-D grid from storage-indexed densities.
pub fn compute_r_1d(rho: &[f64], phi: &PotentialField1D, grid: &Grid1D) -> (Vec<f64>, Vec<f64>) {
    let n = grid.n_cells();
    let dy = grid.dy();
    let mut r_iface = Vec::with_capacity(n + 1);
    let mut r = 0.0;
    r_iface.push(r);
    for s in 1..=n {
        r += dy * rho[s] * phi.dy_center[s];
        r_iface.push(r);
    }
    let mut r_center = vec![0.0; n + 2];
    for s in 1..=n {
        r_center[s] = 0.5 * (r_iface[s - 1] + r_iface[s]);
    }
    r_center[0] = r_iface[0];
    r_center[n + 1] = r_iface[n];
    (r_iface, r_center)
}

/// Evaluates the piecewise-quadratic R obtained by integrating the
/// piecewise-linear density exactly, for a linear potential `phi = g y`.
///
/// `rho_avg` and `rho_slopes` are interior-indexed. At interfaces the value
/// coincides bit-for-bit with [`compute_r_1d`] for `phi_y = g`.
pub fn quadratic_r_linear_potential(
    rho_avg: &[f64],
    rho_slopes: &[f64],
    g: f64,
    grid: &Grid1D,
    y: f64,
) -> Result<f64> {
    let n = grid.n_cells();
    if rho_avg.len() != n || rho_slopes.len() != n {
        return Err(Error::Shape(format!(
            "expected {n} averages and slopes, got {} and {}",
            rho_avg.len(),
            rho_slopes.len()
        )));
    }
    if !(y >= grid.y_left() && y <= grid.y_right()) {
        return Err(Error::OutOfDomain { value: y, lo: grid.y_left(), hi: grid.y_right() });
    }
    let dy = grid.dy();
    let mut k = (((y - grid.y_left()) / dy).floor() as usize).min(n);
    if k < n && y >= grid.iface(k + 1) {
        k += 1;
    }
    if k > 0 && y < grid.iface(k) {
        k -= 1;
    }
    let mut acc = 0.0;
    for i in 0..k {
        acc += dy * rho_avg[i] * g;
    }
    if k == n {
        return Ok(acc);
    }
    let left = y - grid.iface(k);
    let right = y - grid.iface(k + 1);
    Ok(acc + g * (rho_avg[k] * left + 0.5 * rho_slopes[k] * left * right))
}

/// Builds the discrete 1-D steady state with `v = 0` and constant `L`.
///
/// `rho_samples` holds one density per interior cell. Ghost entries of the
/// returned state copy their neighbours; the solver overwrites them.
pub fn steady_state_1d(
    rho_samples: &[f64],
    l_const: f64,
    phi: &PotentialField1D,
    grid: &Grid1D,
    gas: &GasParams,
) -> Result<ConservedState1D> {
    let n = grid.n_cells();
    if rho_samples.len() != n {
        return Err(Error::Shape(format!("expected {n} density samples, got {}", rho_samples.len())));
    }
    let mut state = ConservedState1D::zeros(grid);
    state.rho[1..=n].copy_from_slice(rho_samples);
    state.rho[0] = rho_samples[0];
    state.rho[n + 1] = rho_samples[n - 1];
    state.check_density(grid)?;
    let (_, r_center) = compute_r_1d(&state.rho, phi, grid);
    for s in 1..=n {
        let p = l_const - r_center[s];
        if !(p > 0.0) {
            return Err(Error::Construction {
                at: Location::Cell(s as isize - 1),
                reason: format!("pressure L - R = {p:e} is not positive"),
            });
        }
        state.etot[s] = gas.energy(state.rho[s], 0.0, p) + state.rho[s] * phi.center[s];
    }
    state.etot[0] = state.etot[1];
    state.etot[n + 1] = state.etot[n];
    Ok(state)
}

/// Q and R at interfaces and centres, plus `K`, `L` at centres.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumField2D {
    /// shape `(nx + 1, ny)`; `q_iface[[0, k]] = 0`
    pub q_iface: Array2<f64>,
    pub q_center: Array2<f64>,
    /// shape `(nx, ny + 1)`; `r_iface[[j, 0]] = 0`
    pub r_iface: Array2<f64>,
    pub r_center: Array2<f64>,
    pub k_center: Array2<f64>,
    pub l_center: Array2<f64>,
}

impl EquilibriumField2D {
    /// Fills `K = p + Q` and `L = p + R` at interior centres.
    pub fn assemble_centers(&mut self, p_center: &Array2<f64>) {
        let (sx, sy) = self.q_center.dim();
        for sj in 1..sx - 1 {
            for sk in 1..sy - 1 {
                let p = p_center[[sj, sk]];
                self.k_center[[sj, sk]] = p + self.q_center[[sj, sk]];
                self.l_center[[sj, sk]] = p + self.r_center[[sj, sk]];
            }
        }
    }
}

/// Midpoint recursions for Q along every row and R along every column.
/// Rows and columns are independent and run under `exec`.
pub fn compute_qr_2d(
    rho: &Array2<f64>,
    phi: &PotentialField2D,
    grid: &Grid2D,
    exec: Execution,
) -> EquilibriumField2D {
    let (nx, ny) = (grid.nx(), grid.ny());
    let (dx, dy) = (grid.dx(), grid.dy());
    let rows: Vec<Vec<f64>> = exec.map(ny, |k| {
        let sk = k + 1;
        let mut out = Vec::with_capacity(nx + 1);
        let mut q = 0.0;
        out.push(q);
        for sj in 1..=nx {
            q += dx * rho[[sj, sk]] * phi.dx_center[[sj, sk]];
            out.push(q);
        }
        out
    });
    let cols: Vec<Vec<f64>> = exec.map(nx, |j| {
        let sj = j + 1;
        let mut out = Vec::with_capacity(ny + 1);
        let mut r = 0.0;
        out.push(r);
        for sk in 1..=ny {
            r += dy * rho[[sj, sk]] * phi.dy_center[[sj, sk]];
            out.push(r);
        }
        out
    });
    let q_iface = Array2::from_shape_fn((nx + 1, ny), |(i, k)| rows[k][i]);
    let r_iface = Array2::from_shape_fn((nx, ny + 1), |(j, i)| cols[j][i]);
    let sh = grid.storage_shape();
    let mut q_center = Array2::zeros(sh);
    let mut r_center = Array2::zeros(sh);
    for sj in 1..=nx {
        for sk in 1..=ny {
            q_center[[sj, sk]] = 0.5 * (q_iface[[sj - 1, sk - 1]] + q_iface[[sj, sk - 1]]);
            r_center[[sj, sk]] = 0.5 * (r_iface[[sj - 1, sk - 1]] + r_iface[[sj - 1, sk]]);
        }
    }
    EquilibriumField2D {
        q_iface,
        q_center,
        r_iface,
        r_center,
        k_center: Array2::zeros(sh),
        l_center: Array2::zeros(sh),
    }
}

/// Builds a discrete 2-D motionless steady state with `L = L_j` in every
/// column and `K = K_k` in every row, for potentials of the form
/// `phi(x + y)`.
///
/// Q is normalised to zero on the right edge and R on the bottom edge; the
/// sweep runs right to left and bottom to top. `K_k` must be given in that
/// normalisation. The solver itself integrates Q from the left edge, which
/// shifts every row's K by a row constant and leaves the state steady.
pub fn steady_state_2d(
    l_profile: &[f64],
    k_profile: &[f64],
    phi: &PotentialField2D,
    grid: &Grid2D,
    gas: &GasParams,
) -> Result<ConservedState2D> {
    let (nx, ny) = (grid.nx(), grid.ny());
    if l_profile.len() != nx || k_profile.len() != ny {
        return Err(Error::Shape(format!(
            "expected {nx} L values and {ny} K values, got {} and {}",
            l_profile.len(),
            k_profile.len()
        )));
    }
    let (hx, hy) = (0.5 * grid.dx(), 0.5 * grid.dy());
    let mut state = ConservedState2D::zeros(grid);
    let mut q_right = vec![0.0; ny];
    for j in (0..nx).rev() {
        let sj = j + 1;
        let mut r_below = 0.0;
        for k in 0..ny {
            let sk = k + 1;
            let at = Location::Cell2(j as isize, k as isize);
            let phx = phi.dx_center[[sj, sk]];
            let phy = phi.dy_center[[sj, sk]];
            let den = hx * phx + hy * phy;
            if den == 0.0 || den.abs() <= 1e-12 * (hx * phx.abs() + hy * phy.abs()) {
                return Err(Error::DegeneratePotential { at });
            }
            let (lj, kk) = (l_profile[j], k_profile[k]);
            let rho = (lj - kk - r_below + q_right[k]) / den;
            if !(rho > 0.0) {
                return Err(Error::Construction { at, reason: format!("density {rho:e} is not positive") });
            }
            let p = 0.5 * (lj + kk - r_below - q_right[k] + (hx * phx - hy * phy) * rho);
            if !(p > 0.0) {
                return Err(Error::Construction { at, reason: format!("pressure {p:e} is not positive") });
            }
            state.rho[[sj, sk]] = rho;
            state.etot[[sj, sk]] = gas.energy(rho, 0.0, p) + rho * phi.center[[sj, sk]];
            q_right[k] -= grid.dx() * rho * phx;
            r_below += grid.dy() * rho * phy;
        }
    }
    copy_edges_2d(&mut state.rho);
    copy_edges_2d(&mut state.etot);
    Ok(state)
}

fn copy_edges_2d(f: &mut Array2<f64>) {
    let (sx, sy) = f.dim();
    for sk in 0..sy {
        f[[0, sk]] = f[[1, sk]];
        f[[sx - 1, sk]] = f[[sx - 2, sk]];
    }
    for sj in 0..sx {
        f[[sj, 0]] = f[[sj, 1]];
        f[[sj, sy - 1]] = f[[sj, sy - 2]];
    }
}

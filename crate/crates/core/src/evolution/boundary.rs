use std::str::FromStr;

use crate::eos::GasParams;
use crate::error::{Error, Result};
use crate::grid::{Grid1D, Grid2D};
use crate::potential::{PotentialField1D, PotentialField2D};
use crate::state::{ConservedState1D, ConservedState2D, Halo1D, Halo2D};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    /// density and pressure mirrored, normal velocity negated
    Reflecting,
    /// density, velocity and pressure copied
    ZeroOrder,
    /// velocity copied, density and pressure extrapolated along the
    /// isothermal hydrostatic profile of the boundary cell
    HydrostaticZeroOrder,
}

impl FromStr for BoundaryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reflecting" => Ok(Self::Reflecting),
            "zero_order" => Ok(Self::ZeroOrder),
            "hydrostatic_zero_order" => Ok(Self::HydrostaticZeroOrder),
            _ => Err(Error::InvalidParameter(format!("unknown boundary kind '{s}'"))),
        }
    }
}

/// Boundary treatment per edge. 1-D problems only use the y edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundarySpec {
    pub x_lower: BoundaryKind,
    pub x_upper: BoundaryKind,
    pub y_lower: BoundaryKind,
    pub y_upper: BoundaryKind,
}

impl BoundarySpec {
    pub fn uniform(kind: BoundaryKind) -> Self {
        Self { x_lower: kind, x_upper: kind, y_lower: kind, y_upper: kind }
    }
}

/// Primitive ghost values from the adjacent interior cell.
///
/// `vn` is the velocity normal to the edge, `phi_n` the normal derivative
/// of the potential in the interior and ghost cells, `h` the spacing and
/// `upper` whether the ghost sits above the interior cell.
///
/// The hydrostatic density uses the mean of the two normal derivatives, and
/// the pressure keeps the equilibrium variable constant across the edge with
/// the ghost's share of the gravity integral taken from the ghost density.
/// Both reduce to the plain one-cell extrapolation for linear potentials.
#[allow(clippy::too_many_arguments)]
#[inline]
fn ghost_primitive(
    kind: BoundaryKind,
    rho: f64,
    vn: f64,
    p: f64,
    phi_n: [f64; 2],
    h: f64,
    upper: bool,
) -> (f64, f64, f64) {
    match kind {
        BoundaryKind::ZeroOrder => (rho, vn, p),
        BoundaryKind::Reflecting => (rho, -vn, p),
        BoundaryKind::HydrostaticZeroOrder => {
            let s = if upper { -1.0 } else { 1.0 };
            let rg = rho * (s * 0.5 * h * (phi_n[0] + phi_n[1])).exp();
            (rg, vn, p + s * 0.5 * h * (rho * phi_n[0] + rg * phi_n[1]))
        }
    }
}

/// Fills the two ghost cells of `state` and the ghost entries of the
/// equilibrium variable `l_center`, which are always copied from the
/// neighbouring interior cell. Returns the second ghost layer, obtained by
/// applying the same rule once more (mirroring the second interior cell for
/// reflecting edges).
pub fn fill_ghosts_1d(
    state: &mut ConservedState1D,
    l_center: &mut [f64],
    spec: &BoundarySpec,
    phi: &PotentialField1D,
    grid: &Grid1D,
    gas: &GasParams,
) -> Halo1D {
    let n = grid.n_cells();
    let h = grid.dy();
    let primitive = |q: [f64; 3], phi_c: f64| {
        let v = q[1] / q[0];
        (q[0], v, gas.pressure(q[0], q[1] * q[1], q[2] - q[0] * phi_c))
    };
    let conservative = |(r, v, p): (f64, f64, f64), phi_c: f64| [r, r * v, gas.energy(r, v * v, p) + r * phi_c];
    let mut halo = [[0.0; 3]; 2];
    let edges = [(0, 1, spec.y_lower, false, phi.halo[0]), (n + 1, n, spec.y_upper, true, phi.halo[1])];
    for (side, (ghost, inner, kind, upper, phi_halo)) in edges.into_iter().enumerate() {
        let at = |s: usize| [state.rho[s], state.mom[s], state.etot[s]];
        let (rho, v, p) = primitive(at(inner), phi.center[inner]);
        let g = ghost_primitive(kind, rho, v, p, [phi.dy_center[inner], phi.dy_center[ghost]], h, upper);
        let qg = conservative(g, phi.center[ghost]);
        halo[side] = match kind {
            BoundaryKind::Reflecting => {
                let second = if upper { inner - 1 } else { inner + 1 };
                let (r2, v2, p2) = primitive(at(second), phi.center[second]);
                conservative((r2, -v2, p2), phi_halo)
            }
            _ => {
                let phi_n = [phi.dy_center[ghost], phi.halo_dy[side]];
                conservative(ghost_primitive(kind, g.0, g.1, g.2, phi_n, h, upper), phi_halo)
            }
        };
        state.rho[ghost] = qg[0];
        state.mom[ghost] = qg[1];
        state.etot[ghost] = qg[2];
        l_center[ghost] = l_center[inner];
    }
    Halo1D { lower: halo[0], upper: halo[1] }
}

/// Edge-wise application of the 1-D rules along each boundary normal.
/// `k_center` and `l_center` ghosts are copied from the interior; corner
/// cells are never read by the scheme and get the diagonal interior values.
/// Returns the second ghost layer as in [`fill_ghosts_1d`].
#[allow(clippy::too_many_arguments)]
pub fn fill_ghosts_2d(
    state: &mut ConservedState2D,
    k_center: &mut ndarray::Array2<f64>,
    l_center: &mut ndarray::Array2<f64>,
    spec: &BoundarySpec,
    phi: &PotentialField2D,
    grid: &Grid2D,
    gas: &GasParams,
) -> Halo2D {
    let (nx, ny) = (grid.nx(), grid.ny());
    let (sx, sy) = grid.storage_shape();
    let mut edges = [vec![[0.0; 4]; sy], vec![[0.0; 4]; sy], vec![[0.0; 4]; sx], vec![[0.0; 4]; sx]];
    // (rho, normal velocity, tangential velocity, p)
    let primitive = |q: [f64; 4], phi_c: f64, along_x: bool| {
        let (u, v) = (q[1] / q[0], q[2] / q[0]);
        let p = gas.pressure(q[0], q[1] * q[1] + q[2] * q[2], q[3] - q[0] * phi_c);
        if along_x {
            (q[0], u, v, p)
        } else {
            (q[0], v, u, p)
        }
    };
    let conservative = |(r, vn, vt, p): (f64, f64, f64, f64), phi_c: f64, along_x: bool| {
        let (u, v) = if along_x { (vn, vt) } else { (vt, vn) };
        [r, r * u, r * v, gas.energy(r, u * u + v * v, p) + r * phi_c]
    };
    let mut set = |edge: usize, g: [usize; 2], i: [usize; 2], kind: BoundaryKind, row: usize| {
        let (along_x, upper) = (edge < 2, edge % 2 == 1);
        let (h, dn) = if along_x { (grid.dx(), &phi.dx_center) } else { (grid.dy(), &phi.dy_center) };
        let at = |c: [usize; 2]| [state.rho[c], state.mom_x[c], state.mom_y[c], state.etot[c]];
        let (rho, vn, vt, p) = primitive(at(i), phi.center[i], along_x);
        let (rg, vg, pg) = ghost_primitive(kind, rho, vn, p, [dn[i], dn[g]], h, upper);
        let qg = conservative((rg, vg, vt, pg), phi.center[g], along_x);
        let [phi_halo, dn_halo] = phi.halo[edge][row];
        edges[edge][row] = match kind {
            BoundaryKind::Reflecting => {
                let mut second = i;
                let axis = if along_x { 0 } else { 1 };
                second[axis] = if upper { i[axis] - 1 } else { i[axis] + 1 };
                let (r2, vn2, vt2, p2) = primitive(at(second), phi.center[second], along_x);
                conservative((r2, -vn2, vt2, p2), phi_halo, along_x)
            }
            _ => {
                let (r2, v2, p2) = ghost_primitive(kind, rg, vg, pg, [dn[g], dn_halo], h, upper);
                conservative((r2, v2, vt, p2), phi_halo, along_x)
            }
        };
        state.rho[g] = qg[0];
        state.mom_x[g] = qg[1];
        state.mom_y[g] = qg[2];
        state.etot[g] = qg[3];
        k_center[g] = k_center[i];
        l_center[g] = l_center[i];
    };
    for sk in 1..=ny {
        set(0, [0, sk], [1, sk], spec.x_lower, sk);
        set(1, [nx + 1, sk], [nx, sk], spec.x_upper, sk);
    }
    for sj in 1..=nx {
        set(2, [sj, 0], [sj, 1], spec.y_lower, sj);
        set(3, [sj, ny + 1], [sj, ny], spec.y_upper, sj);
    }
    for (g, i) in [([0, 0], [1, 1]), ([nx + 1, 0], [nx, 1]), ([0, ny + 1], [1, ny]), ([nx + 1, ny + 1], [nx, ny])] {
        state.rho[g] = state.rho[i];
        state.mom_x[g] = state.mom_x[i];
        state.mom_y[g] = state.mom_y[i];
        state.etot[g] = state.etot[i];
        k_center[g] = k_center[i];
        l_center[g] = l_center[i];
    }
    Halo2D { edges }
}

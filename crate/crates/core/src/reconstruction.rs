//! Minmod-limited piecewise-linear reconstruction.
//!
//! In well-balanced mode density and momenta are reconstructed as
//! conservative variables while pressure comes from reconstructing the
//! equilibrium variable (`L` in y, `K` in x) and subtracting the global
//! variable at the face. The baseline mode reconstructs `E + rho*phi`
//! directly. A ghost cell's slope is the plain difference to its interior
//! neighbour, so ghost face values sit halfway between the two averages.

use ndarray::Array2;

use crate::config::Scheme;
use crate::eos::GasParams;
use crate::error::{Error, Face, Location, Result};
use crate::gravity::{EquilibriumField1D, EquilibriumField2D};
use crate::grid::{Grid1D, Grid2D};
use crate::par::Execution;
use crate::potential::{PotentialField1D, PotentialField2D};
use crate::state::{ConservedState1D, ConservedState2D, Halo1D, Halo2D};

/// Generalised minmod: smallest argument if all are positive, largest if all
/// are negative, zero otherwise.
pub fn minmod(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "minmod of an empty list");
    if values.iter().all(|&v| v > 0.0) {
        values.iter().copied().fold(f64::INFINITY, f64::min)
    } else if values.iter().all(|&v| v < 0.0) {
        values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    } else {
        0.0
    }
}

#[inline]
pub fn minmod2(a: f64, b: f64) -> f64 {
    if a > 0.0 && b > 0.0 {
        a.min(b)
    } else if a < 0.0 && b < 0.0 {
        a.max(b)
    } else {
        0.0
    }
}

#[inline]
fn minmod3(a: f64, b: f64, c: f64) -> f64 {
    if a > 0.0 && b > 0.0 && c > 0.0 {
        a.min(b).min(c)
    } else if a < 0.0 && b < 0.0 && c < 0.0 {
        a.max(b).max(c)
    } else {
        0.0
    }
}

/// Slope of the generalised minmod limiter with parameter `theta`.
#[inline]
pub fn limited_slope(q_minus: f64, q_center: f64, q_plus: f64, h: f64, theta: f64) -> f64 {
    minmod3(
        theta * (q_plus - q_center) / h,
        (q_plus - q_minus) / (2.0 * h),
        theta * (q_center - q_minus) / h,
    )
}

/// Limited slopes of a storage-indexed 1-D field. With `halo` values beyond
/// the ghost cells the ghost slopes are limited like interior ones;
/// otherwise they are the difference to the interior neighbour.
pub fn slopes_1d(field: &[f64], h: f64, theta: f64, halo: Option<[f64; 2]>) -> Vec<f64> {
    let n = field.len();
    let mut out = vec![0.0; n];
    for s in 1..n - 1 {
        out[s] = limited_slope(field[s - 1], field[s], field[s + 1], h, theta);
    }
    match halo {
        Some([lo, hi]) => {
            out[0] = limited_slope(lo, field[0], field[1], h, theta);
            out[n - 1] = limited_slope(field[n - 2], field[n - 1], hi, h, theta);
        }
        None => {
            out[0] = (field[1] - field[0]) / h;
            out[n - 1] = (field[n - 1] - field[n - 2]) / h;
        }
    }
    out
}

/// North/south point values of the conservative variables, per storage cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ConservativeFaces1D {
    pub rho_n: Vec<f64>,
    pub rho_s: Vec<f64>,
    pub mom_n: Vec<f64>,
    pub mom_s: Vec<f64>,
    pub etot_n: Vec<f64>,
    pub etot_s: Vec<f64>,
}

pub fn reconstruct_conservative_1d(
    state: &ConservedState1D,
    grid: &Grid1D,
    theta: f64,
    halo: Option<&Halo1D>,
) -> ConservativeFaces1D {
    let h = grid.dy();
    let side = |f: &[f64], c: usize| {
        let sl = slopes_1d(f, h, theta, halo.map(|b| [b.lower[c], b.upper[c]]));
        let north = f.iter().zip(&sl).map(|(q, d)| q + 0.5 * h * d).collect();
        let south = f.iter().zip(&sl).map(|(q, d)| q - 0.5 * h * d).collect();
        (north, south)
    };
    let (rho_n, rho_s) = side(&state.rho, 0);
    let (mom_n, mom_s) = side(&state.mom, 1);
    let (etot_n, etot_s) = side(&state.etot, 2);
    ConservativeFaces1D { rho_n, rho_s, mom_n, mom_s, etot_n, etot_s }
}

/// Reconstructed `L` and recovered pressures, per storage cell.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumFaces1D {
    pub l_n: Vec<f64>,
    pub l_s: Vec<f64>,
    pub p_n: Vec<f64>,
    pub p_s: Vec<f64>,
}

/// Reconstructs `L` from its centre values and recovers `p = L - R` on
/// every face that touches an interface. Ghost faces pointing out of the
/// domain are left as NaN.
pub fn reconstruct_equilibrium_1d(
    l_center: &[f64],
    r_iface: &[f64],
    grid: &Grid1D,
    theta: f64,
) -> Result<EquilibriumFaces1D> {
    let h = grid.dy();
    let n = grid.n_cells();
    let sl = slopes_1d(l_center, h, theta, None);
    let l_n: Vec<f64> = l_center.iter().zip(&sl).map(|(l, d)| l + 0.5 * h * d).collect();
    let l_s: Vec<f64> = l_center.iter().zip(&sl).map(|(l, d)| l - 0.5 * h * d).collect();
    let mut p_n = vec![f64::NAN; n + 2];
    let mut p_s = vec![f64::NAN; n + 2];
    for s in 0..=n {
        p_n[s] = l_n[s] - r_iface[s];
        check_face(p_n[s], "pressure", Location::Cell(s as isize - 1), Face::North)?;
    }
    for s in 1..=n + 1 {
        p_s[s] = l_s[s] - r_iface[s - 1];
        check_face(p_s[s], "pressure", Location::Cell(s as isize - 1), Face::South)?;
    }
    Ok(EquilibriumFaces1D { l_n, l_s, p_n, p_s })
}

#[inline]
fn check_face(value: f64, quantity: &'static str, at: Location, face: Face) -> Result<()> {
    if value > 0.0 {
        Ok(())
    } else {
        Err(Error::FacePositivity { at, face, quantity, value })
    }
}

/// Everything the flux needs at one side of a 1-D interface.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FaceState1D {
    pub rho: f64,
    pub mom: f64,
    /// third conserved component as seen by the flux: `E + rho*phi`
    pub etot: f64,
    pub v: f64,
    pub p: f64,
    /// fluid energy without the gravitational part
    pub energy: f64,
    pub rho_phi: f64,
    /// equilibrium variable `L = p + R` at the face
    pub eq: f64,
}

impl FaceState1D {
    #[inline]
    pub fn conserved(&self) -> [f64; 3] {
        [self.rho, self.mom, self.etot]
    }
}

/// One-sided values at every interface: `north[i]` is the north face of
/// the cell below interface `i`, `south[i]` the south face of the cell above.
#[derive(Debug, Clone, PartialEq)]
pub struct InterfaceValues1D {
    pub north: Vec<FaceState1D>,
    pub south: Vec<FaceState1D>,
}

impl InterfaceValues1D {
    /// North face of interior cell `k`.
    pub fn cell_north(&self, k: usize) -> &FaceState1D {
        &self.north[k + 1]
    }

    pub fn cell_south(&self, k: usize) -> &FaceState1D {
        &self.south[k]
    }
}

/// Full 1-D reconstruction for the selected scheme.
///
/// `state` must have ghost averages filled and `eq.l_center` must include
/// ghost values.
#[allow(clippy::too_many_arguments)]
pub fn interface_values_1d(
    state: &ConservedState1D,
    eq: &EquilibriumField1D,
    phi: &PotentialField1D,
    grid: &Grid1D,
    gas: &GasParams,
    theta: f64,
    scheme: Scheme,
    halo: Option<&Halo1D>,
) -> Result<InterfaceValues1D> {
    let n = grid.n_cells();
    let cons = reconstruct_conservative_1d(state, grid, theta, halo);
    let equil = match scheme {
        Scheme::WellBalanced => Some(reconstruct_equilibrium_1d(&eq.l_center, &eq.r_iface, grid, theta)?),
        Scheme::Baseline => None,
    };
    let build = |s: usize, face: Face, i: usize| -> Result<FaceState1D> {
        let at = Location::Cell(s as isize - 1);
        let (rho, mom, etot_c) = match face {
            Face::North => (cons.rho_n[s], cons.mom_n[s], cons.etot_n[s]),
            _ => (cons.rho_s[s], cons.mom_s[s], cons.etot_s[s]),
        };
        check_face(rho, "density", at, face)?;
        let v = mom / rho;
        let rho_phi = rho * phi.iface[i];
        let kin = 0.5 * mom * v;
        let r = eq.r_iface[i];
        let fs = match &equil {
            Some(e) => {
                let (l, p) = match face {
                    Face::North => (e.l_n[s], e.p_n[s]),
                    _ => (e.l_s[s], e.p_s[s]),
                };
                let energy = p / (gas.gamma() - 1.0) + kin;
                FaceState1D { rho, mom, etot: energy + rho_phi, v, p, energy, rho_phi, eq: l }
            }
            None => {
                let energy = etot_c - rho_phi;
                let p = (gas.gamma() - 1.0) * (energy - kin);
                check_face(p, "pressure", at, face)?;
                FaceState1D { rho, mom, etot: etot_c, v, p, energy, rho_phi, eq: p + r }
            }
        };
        Ok(fs)
    };
    let mut north = Vec::with_capacity(n + 1);
    let mut south = Vec::with_capacity(n + 1);
    for i in 0..=n {
        north.push(build(i, Face::North, i)?);
        south.push(build(i + 1, Face::South, i)?);
    }
    Ok(InterfaceValues1D { north, south })
}

/// Everything the flux needs at one side of a 2-D interface.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FaceState2D {
    pub rho: f64,
    pub mom_x: f64,
    pub mom_y: f64,
    pub etot: f64,
    pub u: f64,
    pub v: f64,
    pub p: f64,
    pub energy: f64,
    pub rho_phi: f64,
    /// `K` on east/west faces, `L` on north/south faces
    pub eq: f64,
}

impl FaceState2D {
    #[inline]
    pub fn conserved(&self) -> [f64; 4] {
        [self.rho, self.mom_x, self.mom_y, self.etot]
    }
}

/// One-sided values at every 2-D interface.
///
/// `east[[i, k]]` / `west[[i, k]]` are the left and right states at
/// x-interface `i` of row `k`; `north[[j, i]]` / `south[[j, i]]` the lower
/// and upper states at y-interface `i` of column `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct InterfaceValues2D {
    pub east: Array2<FaceState2D>,
    pub west: Array2<FaceState2D>,
    pub north: Array2<FaceState2D>,
    pub south: Array2<FaceState2D>,
}

impl InterfaceValues2D {
    pub fn cell_east(&self, j: usize, k: usize) -> &FaceState2D {
        &self.east[[j + 1, k]]
    }

    pub fn cell_west(&self, j: usize, k: usize) -> &FaceState2D {
        &self.west[[j, k]]
    }

    pub fn cell_north(&self, j: usize, k: usize) -> &FaceState2D {
        &self.north[[j, k + 1]]
    }

    pub fn cell_south(&self, j: usize, k: usize) -> &FaceState2D {
        &self.south[[j, k]]
    }
}

// slope vector layout: rho, mom_x, mom_y, etot, equilibrium variable
type Slopes = [f64; 5];

/// Slopes along one direction. Ghost slopes along the direction use the
/// halo when given and the difference to the interior neighbour otherwise;
/// the equilibrium variable always uses the difference.
fn slopes_2d(
    state: &ConservedState2D,
    eq_field: &Array2<f64>,
    grid: &Grid2D,
    theta: f64,
    along_x: bool,
    halo: Option<&Halo2D>,
    exec: Execution,
) -> Array2<Slopes> {
    let (sx, sy) = grid.storage_shape();
    let h = if along_x { grid.dx() } else { grid.dy() };
    let fields = [&state.rho, &state.mom_x, &state.mom_y, &state.etot, eq_field];
    exec.map2((sx, sy), |sj, sk| {
        let mut out = [0.0; 5];
        let (along, across, len_along, len_across) = if along_x { (sj, sk, sx, sy) } else { (sk, sj, sy, sx) };
        if across == 0 || across == len_across - 1 {
            return out;
        }
        let at = |i: usize| if along_x { [i, sk] } else { [sj, i] };
        let c = at(along);
        let first = if along_x { 0 } else { 2 };
        let edge_value = |upper: bool, comp: usize| halo.filter(|_| comp < 4).map(|b| b.edges[first + upper as usize][across][comp]);
        for (comp, (o, f)) in out.iter_mut().zip(fields).enumerate() {
            *o = if along == 0 {
                match edge_value(false, comp) {
                    Some(lo) => limited_slope(lo, f[c], f[at(1)], h, theta),
                    None => (f[at(1)] - f[c]) / h,
                }
            } else if along == len_along - 1 {
                match edge_value(true, comp) {
                    Some(hi) => limited_slope(f[at(along - 1)], f[c], hi, h, theta),
                    None => (f[c] - f[at(along - 1)]) / h,
                }
            } else {
                limited_slope(f[at(along - 1)], f[c], f[at(along + 1)], h, theta)
            };
        }
        out
    })
}

struct FaceInput {
    cons: [f64; 4],
    eq: f64,
    global: f64,
    phi: f64,
}

fn face_state_2d(inp: FaceInput, gas: &GasParams, scheme: Scheme, at: Location, face: Face) -> Result<FaceState2D> {
    let [rho, mom_x, mom_y, etot_c] = inp.cons;
    check_face(rho, "density", at, face)?;
    let (u, v) = (mom_x / rho, mom_y / rho);
    let kin = 0.5 * (mom_x * u + mom_y * v);
    let rho_phi = rho * inp.phi;
    let fs = match scheme {
        Scheme::WellBalanced => {
            let p = inp.eq - inp.global;
            check_face(p, "pressure", at, face)?;
            let energy = p / (gas.gamma() - 1.0) + kin;
            FaceState2D { rho, mom_x, mom_y, etot: energy + rho_phi, u, v, p, energy, rho_phi, eq: inp.eq }
        }
        Scheme::Baseline => {
            let energy = etot_c - rho_phi;
            let p = (gas.gamma() - 1.0) * (energy - kin);
            check_face(p, "pressure", at, face)?;
            FaceState2D { rho, mom_x, mom_y, etot: etot_c, u, v, p, energy, rho_phi, eq: p + inp.global }
        }
    };
    Ok(fs)
}

/// Full 2-D reconstruction. E/W values use x-slopes only and N/S values use
/// y-slopes only; `K` is reconstructed along x and `L` along y.
#[allow(clippy::too_many_arguments)]
pub fn reconstruct_2d(
    state: &ConservedState2D,
    eq: &EquilibriumField2D,
    phi: &PotentialField2D,
    grid: &Grid2D,
    gas: &GasParams,
    theta: f64,
    scheme: Scheme,
    halo: Option<&Halo2D>,
    exec: Execution,
) -> Result<InterfaceValues2D> {
    let sx_sl = slopes_2d(state, &eq.k_center, grid, theta, true, halo, exec);
    let sy_sl = slopes_2d(state, &eq.l_center, grid, theta, false, halo, exec);
    let (hx, hy) = (0.5 * grid.dx(), 0.5 * grid.dy());
    let eq_x = &eq.k_center;
    let eq_y = &eq.l_center;
    let sample = |c: [usize; 2], sl: &Slopes, sign: f64, h: f64, eqf: &Array2<f64>| -> ([f64; 4], f64) {
        let cons = [
            state.rho[c] + sign * h * sl[0],
            state.mom_x[c] + sign * h * sl[1],
            state.mom_y[c] + sign * h * sl[2],
            state.etot[c] + sign * h * sl[3],
        ];
        (cons, eqf[c] + sign * h * sl[4])
    };
    let loc = |sj: usize, sk: usize| Location::Cell2(sj as isize - 1, sk as isize - 1);

    let east = exec.try_map2(grid.x_faces_shape(), |i, k| {
        let c = [i, k + 1];
        let (cons, e) = sample(c, &sx_sl[c], 1.0, hx, eq_x);
        let inp = FaceInput { cons, eq: e, global: eq.q_iface[[i, k]], phi: phi.x_iface[[i, k]] };
        face_state_2d(inp, gas, scheme, loc(c[0], c[1]), Face::East)
    })?;
    let west = exec.try_map2(grid.x_faces_shape(), |i, k| {
        let c = [i + 1, k + 1];
        let (cons, e) = sample(c, &sx_sl[c], -1.0, hx, eq_x);
        let inp = FaceInput { cons, eq: e, global: eq.q_iface[[i, k]], phi: phi.x_iface[[i, k]] };
        face_state_2d(inp, gas, scheme, loc(c[0], c[1]), Face::West)
    })?;
    let north = exec.try_map2(grid.y_faces_shape(), |j, i| {
        let c = [j + 1, i];
        let (cons, e) = sample(c, &sy_sl[c], 1.0, hy, eq_y);
        let inp = FaceInput { cons, eq: e, global: eq.r_iface[[j, i]], phi: phi.y_iface[[j, i]] };
        face_state_2d(inp, gas, scheme, loc(c[0], c[1]), Face::North)
    })?;
    let south = exec.try_map2(grid.y_faces_shape(), |j, i| {
        let c = [j + 1, i + 1];
        let (cons, e) = sample(c, &sy_sl[c], -1.0, hy, eq_y);
        let inp = FaceInput { cons, eq: e, global: eq.r_iface[[j, i]], phi: phi.y_iface[[j, i]] };
        face_state_2d(inp, gas, scheme, loc(c[0], c[1]), Face::South)
    })?;
    Ok(InterfaceValues2D { east, west, north, south })
}

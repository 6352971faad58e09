//! Central-upwind numerical fluxes in two dimensions.
//!
//! The x-fluxes `F` live on x-interfaces (shape `(nx + 1, ny)`) and the
//! y-fluxes `G` on y-interfaces (shape `(nx, ny + 1)`), indexed like the
//! corresponding arrays of [`InterfaceValues2D`].

use ndarray::Array2;

use crate::config::{PsiScale, Scheme};
use crate::eos::GasParams;
use crate::error::{Error, Result};
use crate::flux1d::{cutoff_h, CutoffParams, DEGENERATE_SPEED_GAP};
use crate::gravity::EquilibriumField2D;
use crate::grid::Grid2D;
use crate::par::Execution;
use crate::reconstruction::{minmod2, FaceState2D, InterfaceValues2D};

#[derive(Debug, Clone, PartialEq)]
pub struct DirectionalSpeeds2D {
    pub a_plus: Array2<f64>,
    pub a_minus: Array2<f64>,
    pub b_plus: Array2<f64>,
    pub b_minus: Array2<f64>,
}

impl DirectionalSpeeds2D {
    pub fn max_x(&self) -> f64 {
        self.a_plus.iter().chain(self.a_minus.iter()).fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_y(&self) -> f64 {
        self.b_plus.iter().chain(self.b_minus.iter()).fold(0.0, |m, v| m.max(v.abs()))
    }
}

#[inline]
fn pair(w_minus: f64, c_minus: f64, w_plus: f64, c_plus: f64) -> (f64, f64) {
    (
        (w_minus + c_minus).max(w_plus + c_plus).max(0.0),
        (w_minus - c_minus).min(w_plus - c_plus).min(0.0),
    )
}

pub fn local_speeds_2d(iv: &InterfaceValues2D, gas: &GasParams, exec: Execution) -> Result<DirectionalSpeeds2D> {
    let c = |f: &FaceState2D| crate::eos::sound_speed(f.rho, f.p, gas);
    let ax = exec.try_map2(iv.east.dim(), |i, k| {
        let (e, w) = (&iv.east[[i, k]], &iv.west[[i, k]]);
        Ok(pair(e.u, c(e)?, w.u, c(w)?))
    })?;
    let by = exec.try_map2(iv.north.dim(), |j, i| {
        let (n, s) = (&iv.north[[j, i]], &iv.south[[j, i]]);
        Ok(pair(n.v, c(n)?, s.v, c(s)?))
    })?;
    Ok(DirectionalSpeeds2D {
        a_plus: ax.mapv(|p| p.0),
        a_minus: ax.mapv(|p| p.1),
        b_plus: by.mapv(|p| p.0),
        b_minus: by.mapv(|p| p.1),
    })
}

/// `F(q) = (rho u, rho u^2 + K, rho u v, u (E + rho phi + p))` on an x-face.
#[inline]
pub fn physical_flux_x(f: &FaceState2D) -> [f64; 4] {
    [f.mom_x, f.mom_x * f.u + f.eq, f.mom_x * f.v, f.u * (f.etot + f.p)]
}

/// `G(q) = (rho v, rho u v, rho v^2 + L, v (E + rho phi + p))` on a y-face.
#[inline]
pub fn physical_flux_y(f: &FaceState2D) -> [f64; 4] {
    [f.mom_y, f.mom_y * f.u, f.mom_y * f.v + f.eq, f.v * (f.etot + f.p)]
}

/// Anti-diffusion at one interface; `lo` is the state on the lower-index side.
pub fn antidiffusion_2d(
    q_lo: &[f64; 4],
    q_hi: &[f64; 4],
    f_lo: &[f64; 4],
    f_hi: &[f64; 4],
    plus: f64,
    minus: f64,
) -> [f64; 4] {
    let gap = plus - minus;
    if gap < DEGENERATE_SPEED_GAP {
        return [0.0; 4];
    }
    std::array::from_fn(|c| {
        let star = (plus * q_hi[c] - minus * q_lo[c] - (f_hi[c] - f_lo[c])) / gap;
        minmod2(q_hi[c] - star, star - q_lo[c])
    })
}

/// Central-upwind flux through one interface.
///
/// `normal` is the momentum component along the interface normal (1 for
/// x, 2 for y). `h` weights the density diffusion and the gravitational
/// part of the energy diffusion; the baseline flux is `h = 1` with the
/// whole `E + rho phi` jump, which is what `wb = false` selects.
#[allow(clippy::too_many_arguments)]
fn interface_flux(
    lo: &FaceState2D,
    hi: &FaceState2D,
    f_lo: [f64; 4],
    f_hi: [f64; 4],
    plus: f64,
    minus: f64,
    h: f64,
    wb: bool,
) -> [f64; 4] {
    let gap = plus - minus;
    if gap < DEGENERATE_SPEED_GAP {
        return std::array::from_fn(|c| 0.5 * (f_lo[c] + f_hi[c]));
    }
    let (q_lo, q_hi) = (lo.conserved(), hi.conserved());
    let dq = antidiffusion_2d(&q_lo, &q_hi, &f_lo, &f_hi, plus, minus);
    let coef = plus * minus / gap;
    let mut out: [f64; 4] = std::array::from_fn(|c| f_lo[c] + minus * (f_lo[c] - f_hi[c]) / gap);
    if wb {
        out[0] += coef * h * (hi.rho - lo.rho - dq[0]);
        out[1] += coef * (hi.mom_x - lo.mom_x - dq[1]);
        out[2] += coef * (hi.mom_y - lo.mom_y - dq[2]);
        out[3] += coef * (hi.energy - lo.energy + h * (hi.rho_phi - lo.rho_phi - dq[3]));
    } else {
        for c in 0..4 {
            out[c] += coef * (q_hi[c] - q_lo[c] - dq[c]);
        }
    }
    out
}

/// Steadiness indicators: x-interfaces from x-differences of `K`,
/// y-interfaces from y-differences of `L`.
pub fn psi_2d(
    eq: &EquilibriumField2D,
    grid: &Grid2D,
    scale: PsiScale,
    exec: Execution,
) -> Result<(Array2<f64>, Array2<f64>)> {
    let interior_max = |a: &Array2<f64>| {
        let (sx, sy) = a.dim();
        a.slice(ndarray::s![1..sx - 1, 1..sy - 1]).iter().fold(f64::NEG_INFINITY, |m, &v| m.max(v))
    };
    let (gk, gl) = match scale {
        PsiScale::Global => (Some(interior_max(&eq.k_center)), Some(interior_max(&eq.l_center))),
        PsiScale::Local => (None, None),
    };
    let one = |a: f64, b: f64, h: f64, len: f64, global: Option<f64>| -> Result<f64> {
        let s = global.unwrap_or(a.max(b));
        if !(s > 0.0) {
            return Err(Error::NonPositiveScale { value: s });
        }
        Ok((b - a).abs() / h * len / s)
    };
    let k = &eq.k_center;
    let l = &eq.l_center;
    let px = exec.try_map2(grid.x_faces_shape(), |i, kk| {
        one(k[[i, kk + 1]], k[[i + 1, kk + 1]], grid.dx(), grid.x_length(), gk)
    })?;
    let py = exec.try_map2(grid.y_faces_shape(), |j, i| {
        one(l[[j + 1, i]], l[[j + 1, i + 1]], grid.dy(), grid.y_length(), gl)
    })?;
    Ok((px, py))
}

/// Numerical fluxes of the well-balanced scheme.
pub fn flux_wb_2d(
    iv: &InterfaceValues2D,
    speeds: &DirectionalSpeeds2D,
    psi: &(Array2<f64>, Array2<f64>),
    cutoff: &CutoffParams,
    exec: Execution,
) -> (Array2<[f64; 4]>, Array2<[f64; 4]>) {
    fluxes(iv, speeds, Some((psi, cutoff)), exec)
}

/// Numerical fluxes of the baseline central-upwind scheme.
pub fn flux_baseline_2d(
    iv: &InterfaceValues2D,
    speeds: &DirectionalSpeeds2D,
    exec: Execution,
) -> (Array2<[f64; 4]>, Array2<[f64; 4]>) {
    fluxes(iv, speeds, None, exec)
}

type PsiInput<'a> = (&'a (Array2<f64>, Array2<f64>), &'a CutoffParams);

fn fluxes(
    iv: &InterfaceValues2D,
    sp: &DirectionalSpeeds2D,
    wb: Option<PsiInput<'_>>,
    exec: Execution,
) -> (Array2<[f64; 4]>, Array2<[f64; 4]>) {
    let fx = exec.map2(iv.east.dim(), |i, k| {
        let (lo, hi) = (&iv.east[[i, k]], &iv.west[[i, k]]);
        let h = wb.map_or(1.0, |(p, c)| cutoff_h(p.0[[i, k]], c));
        interface_flux(
            lo,
            hi,
            physical_flux_x(lo),
            physical_flux_x(hi),
            sp.a_plus[[i, k]],
            sp.a_minus[[i, k]],
            h,
            wb.is_some(),
        )
    });
    let gy = exec.map2(iv.north.dim(), |j, i| {
        let (lo, hi) = (&iv.north[[j, i]], &iv.south[[j, i]]);
        let h = wb.map_or(1.0, |(p, c)| cutoff_h(p.1[[j, i]], c));
        interface_flux(
            lo,
            hi,
            physical_flux_y(lo),
            physical_flux_y(hi),
            sp.b_plus[[j, i]],
            sp.b_minus[[j, i]],
            h,
            wb.is_some(),
        )
    });
    (fx, gy)
}

/// All x- and y-fluxes for the selected scheme, plus the speeds.
#[allow(clippy::type_complexity, clippy::too_many_arguments)]
pub fn interface_fluxes_2d(
    iv: &InterfaceValues2D,
    eq: &EquilibriumField2D,
    grid: &Grid2D,
    gas: &GasParams,
    cutoff: &CutoffParams,
    scheme: Scheme,
    psi_scale: PsiScale,
    exec: Execution,
) -> Result<(Array2<[f64; 4]>, Array2<[f64; 4]>, DirectionalSpeeds2D)> {
    let speeds = local_speeds_2d(iv, gas, exec)?;
    let (fx, gy) = match scheme {
        Scheme::Baseline => flux_baseline_2d(iv, &speeds, exec),
        Scheme::WellBalanced => {
            let psi = psi_2d(eq, grid, psi_scale, exec)?;
            flux_wb_2d(iv, &speeds, &psi, cutoff, exec)
        }
    };
    Ok((fx, gy, speeds))
}

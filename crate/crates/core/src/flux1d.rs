//! Central-upwind numerical fluxes in one dimension.

use crate::config::Scheme;
use crate::eos::GasParams;
use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::par::Execution;
use crate::reconstruction::{minmod2, FaceState1D, InterfaceValues1D};

/// Speed gaps below this are treated as a quiescent interface: the flux is
/// the plain average of the two physical fluxes and carries no diffusion.
pub const DEGENERATE_SPEED_GAP: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeedPair {
    pub b_plus: f64,
    pub b_minus: f64,
}

impl SpeedPair {
    #[inline]
    pub fn gap(&self) -> f64 {
        self.b_plus - self.b_minus
    }

    #[inline]
    pub fn is_degenerate(&self) -> bool {
        self.gap() < DEGENERATE_SPEED_GAP
    }

    /// `b+ b- / (b+ - b-)`, non-positive.
    #[inline]
    pub fn beta(&self) -> f64 {
        self.b_plus * self.b_minus / self.gap()
    }

    pub fn max_abs(&self) -> f64 {
        self.b_plus.max(-self.b_minus)
    }
}

/// One-sided local speeds at an interface from the values below (`n`) and
/// above (`s`) it.
#[inline]
pub fn local_speeds(v_n: f64, c_n: f64, v_s: f64, c_s: f64) -> SpeedPair {
    SpeedPair {
        b_plus: (v_n + c_n).max(v_s + c_s).max(0.0),
        b_minus: (v_n - c_n).min(v_s - c_s).min(0.0),
    }
}

/// Parameters of the cutoff `H(psi) = (C psi)^m / (1 + (C psi)^m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffParams {
    pub c: f64,
    pub m: i32,
}

impl Default for CutoffParams {
    fn default() -> Self {
        Self { c: 200.0, m: 6 }
    }
}

impl CutoffParams {
    pub fn new(c: f64, m: i32) -> Result<Self> {
        let p = Self { c, m };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::InvalidParameter(format!("cutoff C = {} must be positive", self.c)));
        }
        if self.m < 2 {
            return Err(Error::InvalidParameter(format!("cutoff exponent m = {} must be at least 2", self.m)));
        }
        Ok(())
    }
}

#[inline]
pub fn cutoff_h(psi: f64, params: &CutoffParams) -> f64 {
    let x = params.c * psi;
    if x <= 1.0 {
        let xm = x.powi(params.m);
        xm / (1.0 + xm)
    } else {
        // same value, but never inf/inf for huge psi
        1.0 / (1.0 + x.powi(-params.m))
    }
}

/// Dimensionless steadiness indicator from the centred equilibrium values
/// of the two cells sharing an interface.
#[inline]
pub fn psi_1d(l_k: f64, l_kp1: f64, dy: f64, domain_length: f64, l_scale: f64) -> Result<f64> {
    if !(l_scale > 0.0) {
        return Err(Error::NonPositiveScale { value: l_scale });
    }
    Ok((l_kp1 - l_k).abs() / dy * domain_length / l_scale)
}

/// `G(q) = (rho v, rho v^2 + L, v (E + rho phi + p))`.
#[inline]
pub fn physical_flux_1d(f: &FaceState1D) -> [f64; 3] {
    [f.mom, f.mom * f.v + f.eq, f.v * (f.etot + f.p)]
}

/// Built-in anti-diffusion `minmod(q_s - q*, q* - q_n)` per component.
pub fn antidiffusion_1d(
    q_n: &[f64; 3],
    q_s: &[f64; 3],
    g_n: &[f64; 3],
    g_s: &[f64; 3],
    sp: &SpeedPair,
) -> [f64; 3] {
    if sp.is_degenerate() {
        return [0.0; 3];
    }
    let gap = sp.gap();
    std::array::from_fn(|c| {
        let star = (sp.b_plus * q_s[c] - sp.b_minus * q_n[c] - (g_s[c] - g_n[c])) / gap;
        minmod2(q_s[c] - star, star - q_n[c])
    })
}

#[inline]
fn central_part(g_n: &[f64; 3], g_s: &[f64; 3], sp: &SpeedPair) -> [f64; 3] {
    let gap = sp.gap();
    // (b+ g_n - b- g_s) / (b+ - b-), written so that equal fluxes pass through exactly
    std::array::from_fn(|c| g_n[c] + sp.b_minus * (g_n[c] - g_s[c]) / gap)
}

#[inline]
fn average(g_n: &[f64; 3], g_s: &[f64; 3]) -> [f64; 3] {
    std::array::from_fn(|c| 0.5 * (g_n[c] + g_s[c]))
}

/// Plain central-upwind flux on the conserved variables.
pub fn flux_baseline_1d(n: &FaceState1D, s: &FaceState1D, sp: &SpeedPair) -> [f64; 3] {
    let (g_n, g_s) = (physical_flux_1d(n), physical_flux_1d(s));
    if sp.is_degenerate() {
        return average(&g_n, &g_s);
    }
    let (q_n, q_s) = (n.conserved(), s.conserved());
    let dq = antidiffusion_1d(&q_n, &q_s, &g_n, &g_s, sp);
    let beta = sp.beta();
    let mut out = central_part(&g_n, &g_s, sp);
    for c in 0..3 {
        out[c] += beta * (q_s[c] - q_n[c] - dq[c]);
    }
    out
}

/// Well-balanced flux: the density and energy diffusion is weighted by
/// `h = H(psi)`, and only the gravitational part of the energy jump is.
pub fn flux_wb_1d(n: &FaceState1D, s: &FaceState1D, sp: &SpeedPair, h: f64) -> [f64; 3] {
    let (g_n, g_s) = (physical_flux_1d(n), physical_flux_1d(s));
    if sp.is_degenerate() {
        return average(&g_n, &g_s);
    }
    let (q_n, q_s) = (n.conserved(), s.conserved());
    let dq = antidiffusion_1d(&q_n, &q_s, &g_n, &g_s, sp);
    let beta = sp.beta();
    let mut out = central_part(&g_n, &g_s, sp);
    out[0] += beta * h * (s.rho - n.rho - dq[0]);
    out[1] += beta * (s.mom - n.mom - dq[1]);
    out[2] += beta * (s.energy - n.energy + h * (s.rho_phi - n.rho_phi - dq[2]));
    out
}

/// Interface fluxes and speeds for a whole 1-D grid.
///
/// `l_center` holds the storage-indexed equilibrium variable used by the
/// steadiness indicator; it is ignored by the baseline scheme.
#[allow(clippy::too_many_arguments)]
pub fn interface_fluxes_1d(
    iv: &InterfaceValues1D,
    l_center: &[f64],
    grid: &Grid1D,
    gas: &GasParams,
    cutoff: &CutoffParams,
    scheme: Scheme,
    exec: Execution,
) -> Result<(Vec<[f64; 3]>, Vec<SpeedPair>)> {
    let (dy, length) = (grid.dy(), grid.length());
    let out = exec.try_map(iv.north.len(), |i| {
        let (n, s) = (&iv.north[i], &iv.south[i]);
        let sp = local_speeds(
            n.v,
            gas.sound_speed_unchecked(n.rho, n.p),
            s.v,
            gas.sound_speed_unchecked(s.rho, s.p),
        );
        let f = match scheme {
            Scheme::Baseline => flux_baseline_1d(n, s, &sp),
            Scheme::WellBalanced => {
                let (la, lb) = (l_center[i], l_center[i + 1]);
                let psi = psi_1d(la, lb, dy, length, la.max(lb))?;
                flux_wb_1d(n, s, &sp, cutoff_h(psi, cutoff))
            }
        };
        Ok((f, sp))
    })?;
    Ok(out.into_iter().unzip())
}

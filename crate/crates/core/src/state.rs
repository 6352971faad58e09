//! Cell-averaged conservative variables.
//!
//! The fourth (1-D: third) component stores the augmented energy `E + rho*phi`,
//! which is what the global-flux form of the equations conserves.

use ndarray::Array2;

use crate::error::{Error, Location, Result};
use crate::grid::{Grid1D, Grid2D};

/// Linear-space operations needed by the Runge-Kutta driver.
pub trait StateVector: Clone {
    /// `self += a * x`
    fn axpy(&mut self, a: f64, x: &Self);
    /// `self = w_self * self + w_other * other`
    fn blend(&mut self, w_self: f64, w_other: f64, other: &Self);
}

impl StateVector for f64 {
    fn axpy(&mut self, a: f64, x: &Self) {
        *self += a * x;
    }

    fn blend(&mut self, w_self: f64, w_other: f64, other: &Self) {
        *self = w_self * *self + w_other * other;
    }
}

impl StateVector for Vec<f64> {
    fn axpy(&mut self, a: f64, x: &Self) {
        for (s, xi) in self.iter_mut().zip(x) {
            *s += a * xi;
        }
    }

    fn blend(&mut self, w_self: f64, w_other: f64, other: &Self) {
        for (s, o) in self.iter_mut().zip(other) {
            *s = w_self * *s + w_other * o;
        }
    }
}

impl StateVector for Array2<f64> {
    fn axpy(&mut self, a: f64, x: &Self) {
        self.zip_mut_with(x, |s, xi| *s += a * xi);
    }

    fn blend(&mut self, w_self: f64, w_other: f64, other: &Self) {
        self.zip_mut_with(other, |s, o| *s = w_self * *s + w_other * o);
    }
}

/// Conservative values `(rho, rho v, E + rho phi)` one cell beyond each
/// ghost cell. Only used to limit the ghost slopes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Halo1D {
    pub lower: [f64; 3],
    pub upper: [f64; 3],
}

/// 2-D analogue of [`Halo1D`]: `(rho, rho u, rho v, E + rho phi)` one cell
/// beyond the ghost layer, per edge in the order x-lower, x-upper,
/// y-lower, y-upper, indexed by storage row or column.
#[derive(Debug, Clone, PartialEq)]
pub struct Halo2D {
    pub edges: [Vec<[f64; 4]>; 4],
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConservedState1D {
    pub rho: Vec<f64>,
    /// rho * v
    pub mom: Vec<f64>,
    /// E + rho * phi
    pub etot: Vec<f64>,
}

impl ConservedState1D {
    pub fn zeros(grid: &Grid1D) -> Self {
        let n = grid.storage_len();
        Self { rho: vec![0.0; n], mom: vec![0.0; n], etot: vec![0.0; n] }
    }

    pub fn storage_len(&self) -> usize {
        self.rho.len()
    }

    pub fn check_extents(&self, grid: &Grid1D) -> Result<()> {
        let n = grid.storage_len();
        if self.rho.len() != n || self.mom.len() != n || self.etot.len() != n {
            return Err(Error::Shape(format!(
                "1-D state extents ({}, {}, {}) do not match grid storage {n}",
                self.rho.len(),
                self.mom.len(),
                self.etot.len()
            )));
        }
        Ok(())
    }

    /// Fails on the first interior cell with non-positive density.
    pub fn check_density(&self, grid: &Grid1D) -> Result<()> {
        for s in grid.interior() {
            if !(self.rho[s] > 0.0) {
                return Err(Error::NonPositiveDensity {
                    at: Location::Cell(s as isize - 1),
                    value: self.rho[s],
                });
            }
        }
        Ok(())
    }

    /// Interior slice of one component (0 = rho, 1 = mom, 2 = etot).
    pub fn interior(&self, component: usize) -> &[f64] {
        let n = self.rho.len();
        let f = match component {
            0 => &self.rho,
            1 => &self.mom,
            2 => &self.etot,
            _ => panic!("1-D state has three components"),
        };
        &f[1..n - 1]
    }
}

impl StateVector for ConservedState1D {
    fn axpy(&mut self, a: f64, x: &Self) {
        self.rho.axpy(a, &x.rho);
        self.mom.axpy(a, &x.mom);
        self.etot.axpy(a, &x.etot);
    }

    fn blend(&mut self, w_self: f64, w_other: f64, other: &Self) {
        self.rho.blend(w_self, w_other, &other.rho);
        self.mom.blend(w_self, w_other, &other.mom);
        self.etot.blend(w_self, w_other, &other.etot);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConservedState2D {
    pub rho: Array2<f64>,
    /// rho * u
    pub mom_x: Array2<f64>,
    /// rho * v
    pub mom_y: Array2<f64>,
    /// E + rho * phi
    pub etot: Array2<f64>,
}

impl ConservedState2D {
    pub fn zeros(grid: &Grid2D) -> Self {
        let sh = grid.storage_shape();
        Self {
            rho: Array2::zeros(sh),
            mom_x: Array2::zeros(sh),
            mom_y: Array2::zeros(sh),
            etot: Array2::zeros(sh),
        }
    }

    pub fn check_extents(&self, grid: &Grid2D) -> Result<()> {
        let sh = grid.storage_shape();
        for (name, f) in [("rho", &self.rho), ("mom_x", &self.mom_x), ("mom_y", &self.mom_y), ("etot", &self.etot)] {
            if f.dim() != sh {
                return Err(Error::Shape(format!(
                    "2-D field {name} has shape {:?}, grid storage is {sh:?}",
                    f.dim()
                )));
            }
        }
        Ok(())
    }

    pub fn check_density(&self, grid: &Grid2D) -> Result<()> {
        for sj in 1..=grid.nx() {
            for sk in 1..=grid.ny() {
                let r = self.rho[[sj, sk]];
                if !(r > 0.0) {
                    return Err(Error::NonPositiveDensity {
                        at: Location::Cell2(sj as isize - 1, sk as isize - 1),
                        value: r,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn component(&self, c: usize) -> &Array2<f64> {
        match c {
            0 => &self.rho,
            1 => &self.mom_x,
            2 => &self.mom_y,
            3 => &self.etot,
            _ => panic!("2-D state has four components"),
        }
    }
}

impl StateVector for ConservedState2D {
    fn axpy(&mut self, a: f64, x: &Self) {
        self.rho.axpy(a, &x.rho);
        self.mom_x.axpy(a, &x.mom_x);
        self.mom_y.axpy(a, &x.mom_y);
        self.etot.axpy(a, &x.etot);
    }

    fn blend(&mut self, w_self: f64, w_other: f64, other: &Self) {
        self.rho.blend(w_self, w_other, &other.rho);
        self.mom_x.blend(w_self, w_other, &other.mom_x);
        self.mom_y.blend(w_self, w_other, &other.mom_y);
        self.etot.blend(w_self, w_other, &other.etot);
    }
}

//! Uniform structured grids with one ghost layer per side.
//!
//! Cell-centred arrays are stored with ghosts: storage index `s` holds
//! interior cell `s - 1`, so a 1-D array has `n + 2` entries. Interface
//! arrays have `n + 1` entries; interface `i` sits at `y_left + i * dy` and
//! separates storage cells `i` and `i + 1`.

use crate::error::{Error, Result};

pub const GHOST_LAYERS: usize = 1;
pub const MIN_CELLS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    y_left: f64,
    y_right: f64,
    n: usize,
    dy: f64,
}

impl Grid1D {
    pub fn new(y_left: f64, y_right: f64, n: usize) -> Result<Self> {
        check_axis("y", y_left, y_right, n)?;
        Ok(Self { y_left, y_right, n, dy: (y_right - y_left) / n as f64 })
    }

    pub fn n_cells(&self) -> usize {
        self.n
    }

    /// Length of cell-centred storage, ghosts included.
    pub fn storage_len(&self) -> usize {
        self.n + 2 * GHOST_LAYERS
    }

    pub fn dy(&self) -> f64 {
        self.dy
    }

    pub fn y_left(&self) -> f64 {
        self.y_left
    }

    pub fn y_right(&self) -> f64 {
        self.y_right
    }

    pub fn length(&self) -> f64 {
        self.y_right - self.y_left
    }

    /// Centre of interior cell `k`; `k = -1` and `k = n` are the ghosts.
    pub fn center(&self, k: isize) -> f64 {
        self.y_left + (k as f64 + 0.5) * self.dy
    }

    pub fn storage_center(&self, s: usize) -> f64 {
        self.center(s as isize - 1)
    }

    /// Interface `i`, i.e. y_{i-1/2} in interior numbering.
    pub fn iface(&self, i: usize) -> f64 {
        if i == self.n {
            self.y_right
        } else {
            self.y_left + i as f64 * self.dy
        }
    }

    pub fn interior(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }
}

/// Two-dimensional grid; `j` runs along x and `k` along y.
///
/// Cell-centred storage is `(nx + 2, ny + 2)` indexed `[[j, k]]`. x-interface
/// arrays are `(nx + 1, ny)` over interior rows and y-interface arrays are
/// `(nx, ny + 1)` over interior columns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    x_left: f64,
    x_right: f64,
    y_left: f64,
    y_right: f64,
    nx: usize,
    ny: usize,
    dx: f64,
    dy: f64,
}

impl Grid2D {
    pub fn new(x: (f64, f64), y: (f64, f64), nx: usize, ny: usize) -> Result<Self> {
        check_axis("x", x.0, x.1, nx)?;
        check_axis("y", y.0, y.1, ny)?;
        Ok(Self {
            x_left: x.0,
            x_right: x.1,
            y_left: y.0,
            y_right: y.1,
            nx,
            ny,
            dx: (x.1 - x.0) / nx as f64,
            dy: (y.1 - y.0) / ny as f64,
        })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn dy(&self) -> f64 {
        self.dy
    }

    pub fn storage_shape(&self) -> (usize, usize) {
        (self.nx + 2, self.ny + 2)
    }

    pub fn x_faces_shape(&self) -> (usize, usize) {
        (self.nx + 1, self.ny)
    }

    pub fn y_faces_shape(&self) -> (usize, usize) {
        (self.nx, self.ny + 1)
    }

    pub fn x_bounds(&self) -> (f64, f64) {
        (self.x_left, self.x_right)
    }

    pub fn y_bounds(&self) -> (f64, f64) {
        (self.y_left, self.y_right)
    }

    pub fn x_length(&self) -> f64 {
        self.x_right - self.x_left
    }

    pub fn y_length(&self) -> f64 {
        self.y_right - self.y_left
    }

    pub fn xc(&self, j: isize) -> f64 {
        self.x_left + (j as f64 + 0.5) * self.dx
    }

    pub fn yc(&self, k: isize) -> f64 {
        self.y_left + (k as f64 + 0.5) * self.dy
    }

    pub fn storage_xc(&self, sj: usize) -> f64 {
        self.xc(sj as isize - 1)
    }

    pub fn storage_yc(&self, sk: usize) -> f64 {
        self.yc(sk as isize - 1)
    }

    pub fn x_iface(&self, i: usize) -> f64 {
        if i == self.nx {
            self.x_right
        } else {
            self.x_left + i as f64 * self.dx
        }
    }

    pub fn y_iface(&self, i: usize) -> f64 {
        if i == self.ny {
            self.y_right
        } else {
            self.y_left + i as f64 * self.dy
        }
    }

    pub fn cell_area(&self) -> f64 {
        self.dx * self.dy
    }
}

fn check_axis(name: &str, lo: f64, hi: f64, n: usize) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite() && hi > lo) {
        return Err(Error::InvalidParameter(format!(
            "{name}-extent [{lo}, {hi}] must be finite with positive length"
        )));
    }
    if n < MIN_CELLS {
        return Err(Error::InvalidParameter(format!(
            "{name}-resolution {n} is below the minimum of {MIN_CELLS} cells"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_are_reproduced() {
        for &(lo, hi, n) in &[(0.0, 1.0, 100), (0.0, 3.0, 101), (-0.7, 0.3, 2000), (0.1, 0.2, 3)] {
            let g = Grid1D::new(lo, hi, n).unwrap();
            assert_eq!(g.iface(0), lo);
            assert_eq!(g.iface(n), hi);
            let formula = lo + n as f64 * g.dy();
            assert!((formula - hi).abs() <= 4.0 * f64::EPSILON * hi.abs().max(1.0));
            assert!((g.center(0) - (lo + 0.5 * g.dy())).abs() < 1e-15);
        }
    }

    #[test]
    fn centers_lie_midway() {
        let g = Grid2D::new((0.0, 3.0), (0.0, 3.0), 101, 101).unwrap();
        for j in 0..101 {
            let mid = 0.5 * (g.x_iface(j) + g.x_iface(j + 1));
            assert!((g.xc(j as isize) - mid).abs() < 1e-14);
        }
        assert!((g.dx() - 3.0 / 101.0).abs() < 1e-16);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(Grid1D::new(0.0, 1.0, 2).is_err());
        assert!(Grid1D::new(1.0, 1.0, 10).is_err());
        assert!(Grid2D::new((0.0, 1.0), (0.0, -1.0), 4, 4).is_err());
    }
}

//! Gravitational potentials and their samples on a grid.

use std::f64::consts::PI;

use ndarray::Array2;

use crate::grid::{Grid1D, Grid2D};

/// Closed-form time-independent potential `phi(x, y)`.
///
/// 1-D problems live on the y-axis and evaluate at `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Potential {
    Constant(f64),
    /// `gx * x + gy * y`
    Linear { gx: f64, gy: f64 },
    /// `y^2 / 2`
    HalfSquare,
    /// `sin(2 pi y)`
    Sine,
}

impl Potential {
    pub fn value(&self, x: f64, y: f64) -> f64 {
        match *self {
            Potential::Constant(c) => c,
            Potential::Linear { gx, gy } => gx * x + gy * y,
            Potential::HalfSquare => 0.5 * y * y,
            Potential::Sine => (2.0 * PI * y).sin(),
        }
    }

    pub fn d_dx(&self, _x: f64, _y: f64) -> f64 {
        match *self {
            Potential::Linear { gx, .. } => gx,
            _ => 0.0,
        }
    }

    pub fn d_dy(&self, _x: f64, y: f64) -> f64 {
        match *self {
            Potential::Constant(_) => 0.0,
            Potential::Linear { gy, .. } => gy,
            Potential::HalfSquare => y,
            Potential::Sine => 2.0 * PI * (2.0 * PI * y).cos(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PotentialField1D {
    /// phi at storage cell centres (ghosts included)
    pub center: Vec<f64>,
    /// phi at the `n + 1` interfaces
    pub iface: Vec<f64>,
    /// phi_y at storage cell centres
    pub dy_center: Vec<f64>,
    /// phi one cell beyond the lower and upper ghost cells
    pub halo: [f64; 2],
    pub halo_dy: [f64; 2],
}

impl PotentialField1D {
    pub fn sample(pot: &Potential, grid: &Grid1D) -> Self {
        let center = (0..grid.storage_len()).map(|s| pot.value(0.0, grid.storage_center(s))).collect();
        let iface = (0..=grid.n_cells()).map(|i| pot.value(0.0, grid.iface(i))).collect();
        let dy_center = (0..grid.storage_len()).map(|s| pot.d_dy(0.0, grid.storage_center(s))).collect();
        let n = grid.n_cells() as isize;
        let (lo, hi) = (grid.center(-2), grid.center(n + 1));
        let halo = [pot.value(0.0, lo), pot.value(0.0, hi)];
        let halo_dy = [pot.d_dy(0.0, lo), pot.d_dy(0.0, hi)];
        Self { center, iface, dy_center, halo, halo_dy }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PotentialField2D {
    pub center: Array2<f64>,
    /// phi at x-interfaces `(x_{i-1/2}, y_k)`, shape `(nx + 1, ny)`
    pub x_iface: Array2<f64>,
    /// phi at y-interfaces `(x_j, y_{i-1/2})`, shape `(nx, ny + 1)`
    pub y_iface: Array2<f64>,
    pub dx_center: Array2<f64>,
    pub dy_center: Array2<f64>,
    /// phi and its normal derivative one cell beyond the ghost layer, per
    /// edge in the order x-lower, x-upper, y-lower, y-upper; indexed by
    /// the storage row (x edges) or column (y edges)
    pub halo: [Vec<[f64; 2]>; 4],
}

impl PotentialField2D {
    pub fn sample(pot: &Potential, grid: &Grid2D) -> Self {
        let sh = grid.storage_shape();
        let at = |sj: usize, sk: usize| (grid.storage_xc(sj), grid.storage_yc(sk));
        let (nx, ny) = (grid.nx() as isize, grid.ny() as isize);
        let x_edge = |x: f64| (0..sh.1).map(|sk| [pot.value(x, grid.storage_yc(sk)), pot.d_dx(x, grid.storage_yc(sk))]).collect();
        let y_edge = |y: f64| (0..sh.0).map(|sj| [pot.value(grid.storage_xc(sj), y), pot.d_dy(grid.storage_xc(sj), y)]).collect();
        let halo = [x_edge(grid.xc(-2)), x_edge(grid.xc(nx + 1)), y_edge(grid.yc(-2)), y_edge(grid.yc(ny + 1))];
        Self {
            halo,
            center: Array2::from_shape_fn(sh, |(sj, sk)| {
                let (x, y) = at(sj, sk);
                pot.value(x, y)
            }),
            x_iface: Array2::from_shape_fn(grid.x_faces_shape(), |(i, k)| {
                pot.value(grid.x_iface(i), grid.yc(k as isize))
            }),
            y_iface: Array2::from_shape_fn(grid.y_faces_shape(), |(j, i)| {
                pot.value(grid.xc(j as isize), grid.y_iface(i))
            }),
            dx_center: Array2::from_shape_fn(sh, |(sj, sk)| {
                let (x, y) = at(sj, sk);
                pot.d_dx(x, y)
            }),
            dy_center: Array2::from_shape_fn(sh, |(sj, sk)| {
                let (x, y) = at(sj, sk);
                pot.d_dy(x, y)
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivatives_match_central_differences() {
        let pots = [
            Potential::Constant(0.3),
            Potential::Linear { gx: 0.0, gy: 1.0 },
            Potential::Linear { gx: 1.0, gy: 1.0 },
            Potential::Linear { gx: 0.0, gy: 0.118 },
            Potential::HalfSquare,
            Potential::Sine,
        ];
        let h = 1e-5;
        for pot in pots {
            for &(x, y) in &[(0.1, 0.2), (0.5, 0.77), (2.0, 1.3)] {
                let fx = (pot.value(x + h, y) - pot.value(x - h, y)) / (2.0 * h);
                let fy = (pot.value(x, y + h) - pot.value(x, y - h)) / (2.0 * h);
                let tol = |d: f64| 1e-6 * d.abs().max(1.0);
                assert!((fx - pot.d_dx(x, y)).abs() < tol(fx), "{pot:?} d/dx at ({x},{y})");
                assert!((fy - pot.d_dy(x, y)).abs() < tol(fy), "{pot:?} d/dy at ({x},{y})");
            }
        }
    }

    #[test]
    fn sampled_extents_match_grid() {
        let g = Grid1D::new(0.0, 1.0, 10).unwrap();
        let f = PotentialField1D::sample(&Potential::Linear { gx: 0.0, gy: 1.0 }, &g);
        assert_eq!(f.center.len(), 12);
        assert_eq!(f.iface.len(), 11);
        assert!((f.center[0] + 0.05).abs() < 1e-15);
        assert_eq!(f.iface[10], 1.0);

        let g2 = Grid2D::new((0.0, 1.0), (0.0, 2.0), 4, 5).unwrap();
        let f2 = PotentialField2D::sample(&Potential::Linear { gx: 1.0, gy: 1.0 }, &g2);
        assert_eq!(f2.center.dim(), (6, 7));
        assert_eq!(f2.x_iface.dim(), (5, 5));
        assert_eq!(f2.y_iface.dim(), (4, 6));
        assert!((f2.x_iface[[4, 0]] - (1.0 + 0.2)).abs() < 1e-15);
    }
}

//! Error norms, fine-to-coarse restriction and convergence studies.

use ndarray::Array2;

use crate::config::{SolverConfig, TimeControls};
use crate::error::{Error, Result};
use crate::evolution::run;
use crate::grid::{Grid1D, Grid2D};
use crate::par::Execution;
use crate::problems::Problem1D;
use crate::state::ConservedState1D;

/// Errors below this are reported as machine zero and get no rate.
pub const MACHINE_ZERO: f64 = 1e-13;

/// `sum |a - b| * cell_volume`.
pub fn l1_error(a: &[f64], b: &[f64], cell_volume: f64) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Shape(format!("cannot compare fields of {} and {} cells", a.len(), b.len())));
    }
    Ok(a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<f64>() * cell_volume)
}

pub fn linf_error(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Shape(format!("cannot compare fields of {} and {} cells", a.len(), b.len())));
    }
    Ok(a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs())))
}

/// L1 difference of two interior-sized 2-D fields.
pub fn l1_error_2d(a: &Array2<f64>, b: &Array2<f64>, grid: &Grid2D) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::Shape(format!("cannot compare fields of shape {:?} and {:?}", a.dim(), b.dim())));
    }
    Ok(a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<f64>() * grid.cell_area())
}

fn ratio(fine: usize, coarse: usize) -> Result<usize> {
    if coarse == 0 || !fine.is_multiple_of(coarse) {
        return Err(Error::InvalidParameter(format!(
            "fine resolution {fine} is not a multiple of coarse resolution {coarse}"
        )));
    }
    Ok(fine / coarse)
}

fn same(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs()))
}

/// Averages groups of fine cells onto the coarse grid. `fine` holds the
/// interior values of a field on `fine_grid`.
pub fn restrict_fine_to_coarse(fine: &[f64], fine_grid: &Grid1D, coarse_grid: &Grid1D) -> Result<Vec<f64>> {
    if fine.len() != fine_grid.n_cells() {
        return Err(Error::Shape(format!("expected {} fine values, got {}", fine_grid.n_cells(), fine.len())));
    }
    if !same(fine_grid.y_left(), coarse_grid.y_left()) || !same(fine_grid.y_right(), coarse_grid.y_right()) {
        return Err(Error::InvalidParameter("grids cover different domains".into()));
    }
    let r = ratio(fine_grid.n_cells(), coarse_grid.n_cells())?;
    Ok(fine.chunks(r).map(|c| c.iter().sum::<f64>() / r as f64).collect())
}

/// 2-D analogue of [`restrict_fine_to_coarse`] on interior-sized arrays.
pub fn restrict_fine_to_coarse_2d(fine: &Array2<f64>, fine_grid: &Grid2D, coarse_grid: &Grid2D) -> Result<Array2<f64>> {
    if fine.dim() != (fine_grid.nx(), fine_grid.ny()) {
        return Err(Error::Shape(format!("fine field has shape {:?}", fine.dim())));
    }
    let rx = ratio(fine_grid.nx(), coarse_grid.nx())?;
    let ry = ratio(fine_grid.ny(), coarse_grid.ny())?;
    let w = 1.0 / (rx * ry) as f64;
    Ok(Array2::from_shape_fn((coarse_grid.nx(), coarse_grid.ny()), |(j, k)| {
        fine.slice(ndarray::s![j * rx..(j + 1) * rx, k * ry..(k + 1) * ry]).sum() * w
    }))
}

/// Interior values of `(rho, rho v, E)` with the gravitational energy
/// removed, as plotted and tabulated.
pub fn primitive_fields_1d(q: &ConservedState1D, phi_center: &[f64]) -> [Vec<f64>; 3] {
    let n = q.rho.len() - 2;
    let e = (1..=n).map(|s| q.etot[s] - q.rho[s] * phi_center[s]).collect();
    [q.rho[1..=n].to_vec(), q.mom[1..=n].to_vec(), e]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StudyMode {
    /// `||q_N(T) - q_N(0)||_1` for every resolution
    Drift,
    /// `||d_N - d_2N||_1` between consecutive resolutions, where `d` is the
    /// deviation from the problem's discrete steady state on the same grid
    /// (the plain solution when the problem has none), restricted to the
    /// coarser grid
    SelfConvergence,
}

impl std::str::FromStr for StudyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "drift" => Ok(StudyMode::Drift),
            "self" => Ok(StudyMode::SelfConvergence),
            _ => Err(Error::InvalidParameter(format!("unknown study mode '{s}' (expected drift|self)"))),
        }
    }
}

pub const COMPONENT_NAMES: [&str; 3] = ["rho", "rho_v", "E"];

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub mode: StudyMode,
    /// resolution labelling each row (the coarser one for self-convergence)
    pub resolutions: Vec<usize>,
    pub errors: Vec<[f64; 3]>,
    /// `rates[i]` compares rows `i - 1` and `i`; `None` for the first row,
    /// when the resolutions are not in ratio 2, or for machine-zero errors
    pub rates: Vec<[Option<f64>; 3]>,
}

impl ErrorReport {
    pub fn new(mode: StudyMode, resolutions: Vec<usize>, errors: Vec<[f64; 3]>) -> Self {
        let rates = (0..errors.len())
            .map(|i| {
                std::array::from_fn(|c| {
                    if i == 0 || resolutions[i] != 2 * resolutions[i - 1] {
                        return None;
                    }
                    let (a, b) = (errors[i - 1][c], errors[i][c]);
                    (a > MACHINE_ZERO && b > MACHINE_ZERO).then(|| (a / b).log2())
                })
            })
            .collect();
        Self { mode, resolutions, errors, rates }
    }

    /// Comma-separated table with a header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("N");
        for c in COMPONENT_NAMES {
            out.push_str(&format!(",err_{c},rate_{c}"));
        }
        out.push('\n');
        for (i, n) in self.resolutions.iter().enumerate() {
            out.push_str(&n.to_string());
            for c in 0..3 {
                let rate = self.rates[i][c].map_or_else(|| "-".to_string(), |r| format!("{r:.2}"));
                out.push_str(&format!(",{:.3e},{rate}", self.errors[i][c]));
            }
            out.push('\n');
        }
        out
    }
}

/// Runs `problem` at every resolution (in parallel under `exec`) and
/// tabulates errors and experimental rates.
pub fn convergence_study(
    problem: &Problem1D,
    config: SolverConfig,
    resolutions: &[usize],
    controls: &TimeControls,
    mode: StudyMode,
    exec: Execution,
) -> Result<ErrorReport> {
    if resolutions.is_empty() || (mode == StudyMode::SelfConvergence && resolutions.len() < 2) {
        return Err(Error::InvalidParameter("not enough resolutions for a convergence study".into()));
    }
    if resolutions.windows(2).any(|w| w[1] != 2 * w[0]) {
        return Err(Error::InvalidParameter(format!("resolutions {resolutions:?} do not form a doubling chain")));
    }
    type Fields = [Vec<f64>; 3];
    let runs: Vec<Result<(Grid1D, Fields, Fields)>> = exec.run_all(resolutions.len(), |i| {
        let case = problem.setup(resolutions[i], config)?;
        let phi = case.solver.phi.center.clone();
        let reference = match (mode, &case.steady) {
            (StudyMode::Drift, _) => primitive_fields_1d(&case.initial, &phi),
            (StudyMode::SelfConvergence, Some(s)) => primitive_fields_1d(s, &phi),
            (StudyMode::SelfConvergence, None) => {
                let n = resolutions[i];
                [vec![0.0; n], vec![0.0; n], vec![0.0; n]]
            }
        };
        let traj = run(&case.solver, case.initial.clone(), controls, &[])?;
        Ok((case.solver.grid, primitive_fields_1d(traj.last(), &phi), reference))
    });
    let runs = runs.into_iter().collect::<Result<Vec<_>>>()?;
    match mode {
        StudyMode::Drift => {
            let errors = runs
                .iter()
                .map(|(g, fin, init)| {
                    let mut e = [0.0; 3];
                    for c in 0..3 {
                        e[c] = l1_error(&fin[c], &init[c], g.dy())?;
                    }
                    Ok(e)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ErrorReport::new(mode, resolutions.to_vec(), errors))
        }
        StudyMode::SelfConvergence => {
            let dev: Vec<[Vec<f64>; 3]> = runs
                .iter()
                .map(|(_, fin, refr)| std::array::from_fn(|c| fin[c].iter().zip(&refr[c]).map(|(a, b)| a - b).collect()))
                .collect();
            let mut errors = Vec::new();
            for i in 0..runs.len() - 1 {
                let (gc, gf) = (&runs[i].0, &runs[i + 1].0);
                let mut e = [0.0; 3];
                for c in 0..3 {
                    let r = restrict_fine_to_coarse(&dev[i + 1][c], gf, gc)?;
                    e[c] = l1_error(&dev[i][c], &r, gc.dy())?;
                }
                errors.push(e);
            }
            Ok(ErrorReport::new(mode, resolutions[..resolutions.len() - 1].to_vec(), errors))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn l1_examples() {
        assert_eq!(l1_error(&[1.0, 2.0], &[1.0, 2.0], 0.5).unwrap(), 0.0);
        let a = vec![0.3; 10];
        let b = vec![0.0; 10];
        assert!((l1_error(&a, &b, 0.1).unwrap() - 0.3).abs() < 1e-15);
        assert!(l1_error(&a, &b[..9], 0.1).is_err());
    }

    #[test]
    fn restriction_examples() {
        let fine = Grid1D::new(0.0, 1.0, 2000).unwrap();
        let coarse = Grid1D::new(0.0, 1.0, 100).unwrap();
        let c = restrict_fine_to_coarse(&vec![2.5; 2000], &fine, &coarse).unwrap();
        assert!(c.iter().all(|&v| (v - 2.5).abs() < 1e-14));

        let lin: Vec<f64> = (0..2000).map(|k| 1.0 + 3.0 * fine.center(k as isize)).collect();
        let c = restrict_fine_to_coarse(&lin, &fine, &coarse).unwrap();
        for (k, v) in c.iter().enumerate() {
            assert!((v - (1.0 + 3.0 * coarse.center(k as isize))).abs() < 1e-12);
        }
        let odd = Grid1D::new(0.0, 1.0, 30).unwrap();
        assert!(restrict_fine_to_coarse(&lin, &fine, &odd).is_err());
    }

    #[test]
    fn restriction_2d_preserves_integral() {
        let fine = Grid2D::new((0.0, 1.0), (0.0, 2.0), 8, 6).unwrap();
        let coarse = Grid2D::new((0.0, 1.0), (0.0, 2.0), 4, 3).unwrap();
        let f = Array2::from_shape_fn((8, 6), |(j, k)| (j * 7 + k * k) as f64 * 0.1);
        let c = restrict_fine_to_coarse_2d(&f, &fine, &coarse).unwrap();
        let a = f.sum() * fine.cell_area();
        let b = c.sum() * coarse.cell_area();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn report_rates() {
        let r = ErrorReport::new(StudyMode::Drift, vec![100, 200, 400], vec![[4e-6; 3], [1e-6; 3], [1e-20; 3]]);
        assert_eq!(r.rates[0], [None; 3]);
        assert!((r.rates[1][0].unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(r.rates[2][1], None);
        assert!(r.to_csv().starts_with("N,err_rho,rate_rho"));
    }

    proptest! {
        #[test]
        fn l1_is_a_metric(
            a in proptest::collection::vec(-5.0f64..5.0, 8),
            b in proptest::collection::vec(-5.0f64..5.0, 8),
            c in proptest::collection::vec(-5.0f64..5.0, 8),
        ) {
            let d = |x: &[f64], y: &[f64]| l1_error(x, y, 0.125).unwrap();
            prop_assert_eq!(d(&a, &b), d(&b, &a));
            prop_assert_eq!(d(&a, &a), 0.0);
            prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c) + 1e-12);
        }

        #[test]
        fn restriction_preserves_integral(f in proptest::collection::vec(-5.0f64..5.0, 40)) {
            let fine = Grid1D::new(0.0, 2.0, 40).unwrap();
            let coarse = Grid1D::new(0.0, 2.0, 10).unwrap();
            let c = restrict_fine_to_coarse(&f, &fine, &coarse).unwrap();
            let a: f64 = f.iter().sum::<f64>() * fine.dy();
            let b: f64 = c.iter().sum::<f64>() * coarse.dy();
            prop_assert!((a - b).abs() < 1e-12);
        }
    }
}

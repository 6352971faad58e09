use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use ndarray::Array2;
use wbcu::analysis::{convergence_study, l1_error_2d, StudyMode};
use wbcu::snapshot::{compare_snapshots, read_snapshot, write_snapshot_1d, write_snapshot_2d};
use wbcu::state::ConservedState2D;
use wbcu::{run, Problem, TimeControls};

use crate::config::RunConfig;
use crate::error::CliError;

const DEFAULT_CHAIN: [usize; 4] = [100, 200, 400, 800];

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

fn dims_2d(cfg: &RunConfig, default: (usize, usize)) -> (usize, usize) {
    let n = cfg.n.first().copied();
    (cfg.nx.or(n).unwrap_or(default.0), cfg.ny.or(n).unwrap_or(default.1))
}

fn single_n(cfg: &RunConfig) -> Result<Option<usize>, CliError> {
    match cfg.n.len() {
        0 => Ok(None),
        1 => Ok(Some(cfg.n[0])),
        _ => Err(CliError::Usage("this command takes a single resolution".into())),
    }
}

fn snapshot_name(problem: &str, cfg: &RunConfig, t: f64) -> String {
    format!("{problem}_{}_t{t:.6}.csv", cfg.mode.name())
}

/// Runs one simulation and writes a snapshot per output time (and the
/// initial state) into `out_dir`. Returns the files written.
pub fn cmd_run(cfg: &RunConfig, out: &mut dyn Write) -> Result<Vec<PathBuf>, CliError> {
    let problem = Problem::by_name(&cfg.problem, cfg.eta)?;
    let solver_cfg = cfg.solver_config()?;
    let dir = cfg.out_dir.clone().unwrap_or_else(|| PathBuf::from("out"));
    fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
    let mut written = Vec::new();
    match problem {
        Problem::OneD(p) => {
            let n = single_n(cfg)?.unwrap_or(p.default_n);
            let t_final = cfg.t_final.unwrap_or(p.t_final);
            let snaps = if cfg.snap_times.is_empty() { &p.snap_times } else { &cfg.snap_times };
            let case = p.setup(n, solver_cfg)?;
            let traj = run(&case.solver, case.initial, &TimeControls::new(cfg.cfl, t_final)?, snaps)?;
            for (t, q) in &traj.snapshots {
                let path = dir.join(snapshot_name(p.name, cfg, *t));
                write_snapshot_1d(q, &case.solver.grid, &case.solver.phi, &solver_cfg.gas, &path)
                    .map_err(|e| io_err(&path, e))?;
                written.push(path);
            }
            writeln!(out, "{}: N={n} mode={} steps={} t={t_final}", p.name, cfg.mode.name(), traj.steps)
                .map_err(|e| io_err(Path::new("<stdout>"), e))?;
        }
        Problem::TwoD(p) => {
            if cfg.n.len() > 1 {
                return Err(CliError::Usage("this command takes a single resolution".into()));
            }
            let (nx, ny) = dims_2d(cfg, p.default_n);
            let t_final = cfg.t_final.unwrap_or(p.t_final);
            let snaps = if cfg.snap_times.is_empty() { &p.snap_times } else { &cfg.snap_times };
            let case = p.setup(nx, ny, solver_cfg)?;
            let traj = run(&case.solver, case.initial, &TimeControls::new(cfg.cfl, t_final)?, snaps)?;
            for (t, q) in &traj.snapshots {
                let path = dir.join(snapshot_name(p.name, cfg, *t));
                write_snapshot_2d(q, &case.solver.grid, &case.solver.phi, &solver_cfg.gas, &path)
                    .map_err(|e| io_err(&path, e))?;
                written.push(path);
            }
            writeln!(out, "{}: {nx}x{ny} mode={} steps={} t={t_final}", p.name, cfg.mode.name(), traj.steps)
                .map_err(|e| io_err(Path::new("<stdout>"), e))?;
        }
    }
    for path in &written {
        writeln!(out, "wrote {}", path.display()).map_err(|e| io_err(Path::new("<stdout>"), e))?;
    }
    Ok(written)
}

fn interior_2d(q: &ConservedState2D, phi: &Array2<f64>) -> [Array2<f64>; 4] {
    let (sx, sy) = q.rho.dim();
    let (nx, ny) = (sx - 2, sy - 2);
    let at = |a: &Array2<f64>, j: usize, k: usize| a[[j + 1, k + 1]];
    [
        Array2::from_shape_fn((nx, ny), |(j, k)| at(&q.rho, j, k)),
        Array2::from_shape_fn((nx, ny), |(j, k)| at(&q.mom_x, j, k)),
        Array2::from_shape_fn((nx, ny), |(j, k)| at(&q.mom_y, j, k)),
        Array2::from_shape_fn((nx, ny), |(j, k)| at(&q.etot, j, k) - at(&q.rho, j, k) * at(phi, j, k)),
    ]
}

/// Starts from the unperturbed steady state of an isothermal problem and
/// reports the L1 drift after `t_final` (1 by default).
pub fn cmd_steady_check(cfg: &RunConfig, out: &mut dyn Write) -> Result<String, CliError> {
    let problem = Problem::by_name(&cfg.problem, Some(0.0))?;
    let solver_cfg = cfg.solver_config()?;
    let controls = TimeControls::new(cfg.cfl, cfg.t_final.unwrap_or(1.0))?;
    let table = match problem {
        Problem::OneD(p) => {
            if !matches!(p.init, wbcu::problems::Init1D::Isothermal { .. }) {
                return Err(CliError::Usage(format!("problem '{}' has no steady state", p.name)));
            }
            let ns = if cfg.n.is_empty() { vec![p.default_n] } else { cfg.n.clone() };
            let mut table = String::from("N,drift_rho,drift_rho_v,drift_E\n");
            for n in ns {
                let r = convergence_study(&p, solver_cfg, &[n], &controls, StudyMode::Drift, cfg.exec)?;
                let e = r.errors[0];
                table.push_str(&format!("{n},{:.3e},{:.3e},{:.3e}\n", e[0], e[1], e[2]));
            }
            table
        }
        Problem::TwoD(p) => {
            if !matches!(p.init, wbcu::problems::Init2D::Isothermal { .. }) {
                return Err(CliError::Usage(format!("problem '{}' has no steady state", p.name)));
            }
            let (nx, ny) = dims_2d(cfg, p.default_n);
            let case = p.setup(nx, ny, solver_cfg)?;
            let phi = &case.solver.phi.center;
            let before = interior_2d(&case.initial, phi);
            let traj = run(&case.solver, case.initial.clone(), &controls, &[])?;
            let after = interior_2d(traj.last(), phi);
            let mut e = [0.0; 4];
            for c in 0..4 {
                e[c] = l1_error_2d(&after[c], &before[c], &case.solver.grid)?;
            }
            format!(
                "nx,ny,drift_rho,drift_rho_u,drift_rho_v,drift_E\n{nx},{ny},{:.3e},{:.3e},{:.3e},{:.3e}\n",
                e[0], e[1], e[2], e[3]
            )
        }
    };
    write!(out, "{table}").map_err(|e| io_err(Path::new("<stdout>"), e))?;
    Ok(table)
}

/// Convergence table of a 1-D problem over a doubling chain of resolutions.
pub fn cmd_converge(cfg: &RunConfig, out: &mut dyn Write) -> Result<String, CliError> {
    let p = match Problem::by_name(&cfg.problem, cfg.eta)? {
        Problem::OneD(p) => p,
        Problem::TwoD(p) => {
            return Err(CliError::Usage(format!("convergence studies are 1-D only ('{}' is 2-D)", p.name)))
        }
    };
    let ns = if cfg.n.is_empty() { DEFAULT_CHAIN.to_vec() } else { cfg.n.clone() };
    let controls = TimeControls::new(cfg.cfl, cfg.t_final.unwrap_or(p.t_final))?;
    let report = convergence_study(&p, cfg.solver_config()?, &ns, &controls, cfg.study, cfg.exec)?;
    let csv = report.to_csv();
    if let Some(dir) = &cfg.out_dir {
        fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
        let path = dir.join(format!("{}_{}_converge.csv", p.name, cfg.mode.name()));
        fs::write(&path, &csv).map_err(|e| io_err(&path, e))?;
    }
    write!(out, "{csv}").map_err(|e| io_err(Path::new("<stdout>"), e))?;
    Ok(csv)
}

/// Column-wise L1 and max differences of two snapshot files.
pub fn cmd_compare(a: &Path, b: &Path, out: &mut dyn Write) -> Result<String, CliError> {
    let sa = read_snapshot(a).map_err(|e| io_err(a, e))?;
    let sb = read_snapshot(b).map_err(|e| io_err(b, e))?;
    let diffs = compare_snapshots(&sa, &sb).map_err(CliError::Usage)?;
    let mut table = String::from("column,l1,linf\n");
    for d in diffs {
        table.push_str(&format!("{},{:.6e},{:.6e}\n", d.column, d.l1, d.linf));
    }
    write!(out, "{table}").map_err(|e| io_err(Path::new("<stdout>"), e))?;
    Ok(table)
}

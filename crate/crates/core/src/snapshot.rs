//! Comma-separated solution snapshots.
//!
//! One row per interior cell, `{:.16e}` values (round-trip exact), and the
//! fluid energy `E` without the gravitational part.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::eos::GasParams;
use crate::grid::{Grid1D, Grid2D};
use crate::potential::{PotentialField1D, PotentialField2D};
use crate::state::{ConservedState1D, ConservedState2D};

pub const HEADER_1D: [&str; 5] = ["y", "rho", "v", "p", "E"];
pub const HEADER_2D: [&str; 7] = ["x", "y", "rho", "u", "v", "p", "E"];

fn write_rows(path: &Path, header: &[&str], rows: impl Iterator<Item = Vec<f64>>) -> io::Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(w, "{}", header.join(","))?;
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        writeln!(w, "{}", cells.join(","))?;
    }
    w.flush()
}

pub fn write_snapshot_1d(
    state: &ConservedState1D,
    grid: &Grid1D,
    phi: &PotentialField1D,
    gas: &GasParams,
    path: &Path,
) -> io::Result<()> {
    let rows = grid.interior().map(|s| {
        let rho = state.rho[s];
        let e = state.etot[s] - rho * phi.center[s];
        vec![grid.storage_center(s), rho, state.mom[s] / rho, gas.pressure(rho, state.mom[s].powi(2), e), e]
    });
    write_rows(path, &HEADER_1D, rows)
}

/// Rows run over `j` (x index) first, then `k`.
pub fn write_snapshot_2d(
    state: &ConservedState2D,
    grid: &Grid2D,
    phi: &PotentialField2D,
    gas: &GasParams,
    path: &Path,
) -> io::Result<()> {
    let (nx, ny) = (grid.nx(), grid.ny());
    let rows = (1..=nx).flat_map(|sj| (1..=ny).map(move |sk| (sj, sk))).map(|(sj, sk)| {
        let c = [sj, sk];
        let rho = state.rho[c];
        let e = state.etot[c] - rho * phi.center[c];
        let mom_sq = state.mom_x[c].powi(2) + state.mom_y[c].powi(2);
        vec![
            grid.storage_xc(sj),
            grid.storage_yc(sk),
            rho,
            state.mom_x[c] / rho,
            state.mom_y[c] / rho,
            gas.pressure(rho, mom_sq, e),
            e,
        ]
    });
    write_rows(path, &HEADER_2D, rows)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Snapshot {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn is_2d(&self) -> bool {
        self.columns.first().map(String::as_str) == Some("x")
    }

    /// Cell size (1-D) or area (2-D) from the coordinate columns.
    pub fn cell_volume(&self) -> Option<f64> {
        let spacing = |name: &str| {
            let mut v = self.column(name)?;
            v.sort_by(f64::total_cmp);
            v.dedup();
            (v.len() >= 2).then(|| v[1] - v[0])
        };
        if self.is_2d() {
            Some(spacing("x")? * spacing("y")?)
        } else {
            spacing("y")
        }
    }
}

pub fn read_snapshot(path: &Path) -> io::Result<Snapshot> {
    let text = fs::read_to_string(path)?;
    let bad = |msg: String| io::Error::new(io::ErrorKind::InvalidData, format!("{}: {msg}", path.display()));
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad("empty file".into()))?;
    let columns: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let row = line
            .split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| bad(format!("row {}: {e}", i + 1)))?;
        if row.len() != columns.len() {
            return Err(bad(format!("row {} has {} values, expected {}", i + 1, row.len(), columns.len())));
        }
        rows.push(row);
    }
    Ok(Snapshot { columns, rows })
}

/// Per-column difference of two snapshots on the same grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnDiff {
    pub column: String,
    pub l1: f64,
    pub linf: f64,
}

/// L1 and max-norm differences of every solution column. Fails if the
/// coordinates disagree.
pub fn compare_snapshots(a: &Snapshot, b: &Snapshot) -> Result<Vec<ColumnDiff>, String> {
    if a.columns != b.columns {
        return Err(format!("column mismatch: {:?} vs {:?}", a.columns, b.columns));
    }
    if a.rows.len() != b.rows.len() {
        return Err(format!("row count mismatch: {} vs {}", a.rows.len(), b.rows.len()));
    }
    let n_coords = if a.is_2d() { 2 } else { 1 };
    for (i, (ra, rb)) in a.rows.iter().zip(&b.rows).enumerate() {
        for c in 0..n_coords {
            if (ra[c] - rb[c]).abs() > 1e-12 * (1.0 + ra[c].abs()) {
                return Err(format!("coordinates differ in row {}", i + 1));
            }
        }
    }
    let vol = a.cell_volume().unwrap_or(1.0);
    Ok((n_coords..a.columns.len())
        .map(|c| {
            let (mut l1, mut linf) = (0.0, 0.0f64);
            for (ra, rb) in a.rows.iter().zip(&b.rows) {
                let d = (ra[c] - rb[c]).abs();
                l1 += d;
                linf = linf.max(d);
            }
            ColumnDiff { column: a.columns[c].clone(), l1: l1 * vol, linf }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::Potential;

    #[test]
    fn round_trip_1d() {
        let dir = std::env::temp_dir().join(format!("wbcu-snap-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("s.csv");
        let g = Grid1D::new(0.0, 1.0, 3).unwrap();
        let phi = PotentialField1D::sample(&Potential::Linear { gx: 0.0, gy: 1.0 }, &g);
        let gas = GasParams::default();
        let mut q = ConservedState1D::zeros(&g);
        q.rho = vec![1.0, 1.0 / 3.0, 0.7, std::f64::consts::PI, 1.0];
        q.mom = vec![0.0, 0.1, -0.2, 1e-17, 0.0];
        q.etot = vec![3.0, 2.0, 2.5, 9.0, 3.0];
        write_snapshot_1d(&q, &g, &phi, &gas, &path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 4);
        let snap = read_snapshot(&path).unwrap();
        assert_eq!(snap.columns, HEADER_1D);
        assert_eq!(snap.column("rho").unwrap(), q.rho[1..4].to_vec());
        let v = snap.column("v").unwrap();
        assert_eq!(v[0], 0.1 / (1.0 / 3.0));
        let e = snap.column("E").unwrap();
        assert_eq!(e[2], 9.0 - std::f64::consts::PI * phi.center[3]);
        let d = compare_snapshots(&snap, &snap).unwrap();
        assert!(d.iter().all(|c| c.l1 == 0.0 && c.linf == 0.0));
        fs::remove_dir_all(&dir).unwrap();
    }
}

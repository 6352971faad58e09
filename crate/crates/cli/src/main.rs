//! `wbcu`: command-line driver for the gravity Euler solver.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod error;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{read_config_file, RunConfig};
use error::CliError;

#[derive(Parser)]
#[command(name = "wbcu", version, about = "Well-balanced central-upwind solver for Euler with gravity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one simulation and write snapshots
    Run(Opts),
    /// Report the L1 drift of an unperturbed steady state
    SteadyCheck(Opts),
    /// Print errors and experimental rates over a doubling chain (1-D)
    Converge(Opts),
    /// Column-wise L1 / max differences of two snapshot files
    Compare { a: PathBuf, b: PathBuf },
}

/// Every config key is also a flag; flags override the config file.
#[derive(Args, Debug, Default)]
struct Opts {
    /// key = value file (# starts a comment)
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    problem: Option<String>,
    /// wb | baseline
    #[arg(long)]
    mode: Option<String>,
    /// resolution, or a comma list for converge
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    nx: Option<String>,
    #[arg(long)]
    ny: Option<String>,
    #[arg(long)]
    theta: Option<String>,
    #[arg(long)]
    cfl: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long = "cutoff_c", alias = "cutoff-c")]
    cutoff_c: Option<String>,
    #[arg(long = "cutoff_m", alias = "cutoff-m")]
    cutoff_m: Option<String>,
    /// local | global
    #[arg(long = "psi_scale", alias = "psi-scale")]
    psi_scale: Option<String>,
    #[arg(long = "t_final", alias = "t-final")]
    t_final: Option<String>,
    #[arg(long)]
    eta: Option<String>,
    #[arg(long = "out_dir", alias = "out-dir")]
    out_dir: Option<String>,
    /// comma list of output times
    #[arg(long = "snap_times", alias = "snap-times")]
    snap_times: Option<String>,
    /// drift | self (converge only)
    #[arg(long)]
    study: Option<String>,
    /// serial | parallel
    #[arg(long)]
    exec: Option<String>,
}

impl Opts {
    fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut map = match &self.config {
            Some(path) => read_config_file(path)?,
            None => BTreeMap::new(),
        };
        let flags = [
            ("problem", &self.problem),
            ("mode", &self.mode),
            ("n", &self.n),
            ("nx", &self.nx),
            ("ny", &self.ny),
            ("theta", &self.theta),
            ("cfl", &self.cfl),
            ("gamma", &self.gamma),
            ("cutoff_c", &self.cutoff_c),
            ("cutoff_m", &self.cutoff_m),
            ("psi_scale", &self.psi_scale),
            ("t_final", &self.t_final),
            ("eta", &self.eta),
            ("out_dir", &self.out_dir),
            ("snap_times", &self.snap_times),
            ("study", &self.study),
            ("exec", &self.exec),
        ];
        for (k, v) in flags {
            if let Some(v) = v {
                map.insert(k.to_string(), v.trim().to_string());
            }
        }
        RunConfig::from_map(&map)
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Run(o) => commands::cmd_run(&o.resolve()?, &mut out).map(drop),
        Command::SteadyCheck(o) => commands::cmd_steady_check(&o.resolve()?, &mut out).map(drop),
        Command::Converge(o) => commands::cmd_converge(&o.resolve()?, &mut out).map(drop),
        Command::Compare { a, b } => commands::cmd_compare(&a, &b, &mut out).map(drop),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("wbcu: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

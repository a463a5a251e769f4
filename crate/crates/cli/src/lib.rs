//! The `darboux` command-line tool. Every subcommand parses its inputs,
//! calls into `darboux_core`, and renders the result as text, JSON or CSV.
//!
//! Exit codes: 0 on success, 1 on domain errors (the mathematics rejected the
//! input), 2 on usage errors.

mod args;
mod render;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::Parser;
use darboux_core::numeric::lax::km_lax_invariants;
use darboux_core::numeric::{conservation_report, darboux_flow_check, simulate, Invariant, SimConfig};
use darboux_core::search::{search_all_with, Execution};
use darboux_core::structure::{casimir_bracket_residuals, casimir_conditions_hold};
use darboux_core::{casimir_exponents, certify, classify_params, lv, poisson_bracket, LVParams};
use thiserror::Error;

pub use args::{parse_poly_input, Check, Cli, Command, Format};
use render::{CheckRow, PoissonReport, SimulationReport};

/// Environment variable bounding `search --max-degree`.
pub const HARD_CAP_VAR: &str = "DARBOUX_MAX_DEGREE_HARD_CAP";
pub const DEFAULT_HARD_CAP: u32 = 8;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] darboux_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return u8::try_from(code).unwrap_or(2);
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn hard_cap() -> Result<u32, CliError> {
    match std::env::var(HARD_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{HARD_CAP_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_HARD_CAP),
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Search { params, max_degree, jobs } => {
            let cap = hard_cap()?;
            if *max_degree > cap {
                return Err(CliError::Usage(format!(
                    "--max-degree {max_degree} exceeds the hard cap {cap} (set {HARD_CAP_VAR} to raise it)"
                )));
            }
            let p = params.params();
            let results = match jobs {
                Some(1) => search_all_with(&p, *max_degree, Execution::Sequential),
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*n as usize)
                    .build()
                    .map_err(|e| CliError::Usage(format!("cannot start {n} workers: {e}")))?
                    .install(|| search_all_with(&p, *max_degree, Execution::Parallel)),
                None => search_all_with(&p, *max_degree, Execution::Parallel),
            };
            render::search(format, &p, &results, out)?;
        }
        Command::Certify { params, poly } => {
            let outcome = certify(&params.params(), poly)?;
            render::certification(format, &outcome, out)?;
        }
        Command::Casimir { params } => {
            let exps = casimir_exponents(&params.params()).map(|e| e.map(|x| x.to_string()));
            render::casimir(format, exps.as_ref(), out)?;
        }
        Command::Conditions { params, max_degree } => {
            let p = params.params();
            render::conditions(format, &classify_params(&p, *max_degree), out)?;
        }
        Command::PoissonCheck { params, f, g } => {
            let p = params.params();
            let casimir = casimir_exponents(&p);
            let (conditions, commutes) = match &casimir {
                Some(e) => (
                    casimir_conditions_hold(&p, e),
                    casimir_bracket_residuals(&p, e)?.iter().all(|r| r.is_zero()),
                ),
                None => (true, true),
            };
            let report = PoissonReport {
                hamiltonian_consistent: lv::hamiltonian_consistency(&p),
                jacobi_identity: lv::jacobi_polynomial(&p).is_zero(),
                casimir: casimir
                    .map(|e| e.iter().map(i64::try_from).collect::<Result<Vec<_>, _>>())
                    .transpose()
                    .map_err(|_| darboux_core::Error::ExponentOverflow)?,
                casimir_conditions: conditions,
                casimir_commutes: commutes,
                bracket: f.as_ref().zip(g.as_ref()).map(|(f, g)| poisson_bracket(&p, f, g)),
            };
            render::poisson(format, &report, out)?;
        }
        Command::Simulate { params, x0, step, t_end, check } => {
            let [a, b, c] = x0[..] else {
                return Err(CliError::Usage(format!("--x0 needs three values, got {}", x0.len())));
            };
            let p = params.params();
            let cfg = SimConfig::new([a, b, c], *step, *t_end);
            cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
            let traj = simulate(&p, &cfg)?;
            let rows = run_checks(&p, &traj, check)?;
            let report = SimulationReport {
                params: p,
                config: cfg,
                samples: traj.len(),
                final_state: traj.last(),
                checks: rows,
            };
            render::simulation(format, &report, out)?;
        }
    }
    Ok(())
}

fn run_checks(
    p: &LVParams,
    traj: &darboux_core::numeric::Trajectory,
    checks: &[Check],
) -> Result<Vec<CheckRow>, CliError> {
    let mut rows = Vec::new();
    for check in checks {
        match check {
            Check::Hamiltonian => {
                let r = conservation_report(traj, &Invariant::Poly(darboux_core::Poly::hamiltonian()))?;
                rows.push(CheckRow::drift("H", r.max_rel_drift));
            }
            Check::Casimir => {
                let inv = Invariant::casimir(p)?
                    .ok_or_else(|| CliError::Usage("r = s = t = 0 has no Casimir to check".into()))?;
                let r = conservation_report(traj, &inv)?;
                rows.push(CheckRow::drift("casimir", r.max_rel_drift));
            }
            Check::KmLax => {
                let d = km_lax_invariants(traj)?;
                for (i, v) in d.max_rel_drift.iter().enumerate() {
                    rows.push(CheckRow::drift(&format!("tr L^{}", i + 1), *v));
                }
            }
            Check::Conserved(f) => {
                let r = conservation_report(traj, &Invariant::Poly(f.clone()))?;
                rows.push(CheckRow::drift(&f.to_string(), r.max_rel_drift));
            }
            Check::Darboux(f, lambda) => {
                let residual = darboux_flow_check(f, lambda, traj)?;
                rows.push(CheckRow::residual(&format!("{f} / {lambda}"), residual));
            }
        }
    }
    Ok(rows)
}

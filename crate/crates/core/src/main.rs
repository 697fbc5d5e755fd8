//! Command-line front end: runs verification suites, emits the documented
//! file formats, and drives the lattice field simulator.
//!
//! Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage
//! error, 3 I/O error.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use symlab::noether::{
    self, conservation_report, InitialCondition, LatticeConfig,
};
use symlab::report::Report;
use symlab::suites::{all_suites, run_suite, SuiteOptions};

#[derive(Parser)]
#[command(
    name = "symlab",
    about = "Numerical verification of group- and field-theory constructions",
    version
)]
struct Cli {
    /// Seed for all randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Default tolerance for residual checks.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Write the report to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Run independent suites on separate threads (merge order is fixed).
    #[arg(long, global = true)]
    parallel: bool,
    /// Omit the timestamp so reruns are byte-identical.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and report each check.
    Verify {
        /// finite | lie | so3su2 | su3 | lorentz | poincare | noether | all
        suite: String,
    },
    /// Write one of the documented file formats.
    Emit {
        what: EmitKind,
        path: std::path::PathBuf,
        /// Append the hypercharge column to weights-csv.
        #[arg(long)]
        hypercharge: bool,
    },
    /// Lattice scalar-field simulator.
    Noether {
        #[command(subcommand)]
        action: NoetherAction,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum EmitKind {
    /// Fundamental weight points as `label,i3,x8` CSV.
    WeightsCsv,
    /// The four-element rotation group as `{elements, table}` JSON.
    GroupJson,
    /// A sample matrix in the `{dim, entries}` JSON wire format.
    MatrixJson,
}

#[derive(Subcommand)]
enum NoetherAction {
    /// Evolve the field and report conserved-charge drifts.
    Run {
        #[arg(long, default_value_t = 1)]
        dims: usize,
        /// Sites per spatial direction.
        #[arg(long, default_value_t = 256)]
        grid: usize,
        #[arg(long, default_value_t = 1.0)]
        dx: f64,
        #[arg(long, default_value_t = 0.05)]
        dt: f64,
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        #[arg(long, default_value_t = 2000)]
        steps: usize,
        /// gaussian | gaussian:AMP,WIDTH | mode:K | file:PATH
        #[arg(long, default_value = "gaussian")]
        ic: String,
        /// Record charges every this many steps.
        #[arg(long, default_value_t = 100)]
        sample: usize,
        /// Also run a convergence study over this many dt-halvings.
        #[arg(long)]
        refine: Option<usize>,
    },
}

#[derive(Serialize)]
struct NoetherRunDoc {
    config: LatticeConfig,
    initial_condition: String,
    timestamp: Option<u64>,
    samples: Vec<noether::ChargeRecord>,
    energy_max_rel_drift: f64,
    energy_drift_rate: f64,
    momentum_max_abs_drift: f64,
    boost_max_rel_drift: f64,
    angular_momentum_max_drift: Option<f64>,
    divergence_residual: f64,
    /// One row per refinement level: (dt, energy drift, divergence
    /// residual), present only with --refine.
    convergence: Option<Vec<(f64, f64, f64)>>,
}

fn now(no_timestamp: bool) -> Option<u64> {
    if no_timestamp {
        None
    } else {
        Some(
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        )
    }
}

fn write_output(out: &Option<std::path::PathBuf>, text: &str) -> Result<(), std::io::Error> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn render_report(cli: &Cli, mut report: Report) -> ExitCode {
    report.timestamp = now(cli.no_timestamp);
    let text = if cli.json {
        let mut s = report.to_json();
        s.push('\n');
        s
    } else {
        report.to_text()
    };
    if let Err(e) = write_output(&cli.out, &text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(3);
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        if let Some(c) = report.first_failure() {
            eprintln!("first failure: {} = {:e} ({})", c.name, c.value, c.reference);
        }
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = SuiteOptions {
        seed: cli.seed,
        tol: cli.tol,
    };

    match &cli.command {
        Command::Verify { suite } => {
            let report = if suite == "all" {
                all_suites(&opts, cli.parallel)
            } else {
                match run_suite(suite, &opts) {
                    Ok(r) => r,
                    Err(_) => {
                        eprintln!(
                            "error: unknown suite '{suite}' (expected one of: {}, all)",
                            symlab::suites::SUITE_NAMES.join(", ")
                        );
                        return ExitCode::from(2);
                    }
                }
            };
            render_report(&cli, report)
        }
        Command::Emit {
            what,
            path,
            hypercharge,
        } => {
            let text = match what {
                EmitKind::WeightsCsv => symlab::su3flavor::weights_csv(
                    &symlab::su3flavor::fundamental_weights(),
                    *hypercharge,
                ),
                EmitKind::GroupJson => {
                    let mut s = serde_json::to_string_pretty(&symlab::finitegroup::c4())
                        .expect("group serializes");
                    s.push('\n');
                    s
                }
                EmitKind::MatrixJson => {
                    let m = symlab::so3su2::so3_rotation(
                        symlab::so3su2::Axis::Z,
                        std::f64::consts::FRAC_PI_3,
                    );
                    let mut s = serde_json::to_string_pretty(&m).expect("matrix serializes");
                    s.push('\n');
                    s
                }
            };
            match std::fs::write(path, text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    ExitCode::from(3)
                }
            }
        }
        Command::Noether { action } => {
            let NoetherAction::Run {
                dims,
                grid,
                dx,
                dt,
                mass,
                steps,
                ic,
                sample,
                refine,
            } = action;
            let config = LatticeConfig {
                spatial_dims: *dims,
                extent: *grid,
                dx: *dx,
                dt: *dt,
                mass: *mass,
                steps: *steps,
            };
            let parsed_ic = match InitialCondition::parse(ic) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: bad --ic: {e}");
                    return ExitCode::from(2);
                }
            };
            let rep = match conservation_report(&config, &parsed_ic, *sample) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(match e {
                        symlab::Error::Io(_) => 3,
                        _ => 2,
                    });
                }
            };
            let convergence = refine.map(|levels| {
                (0..levels)
                    .map(|k| {
                        let c = LatticeConfig {
                            dt: config.dt / (1 << k) as f64,
                            steps: config.steps * (1 << k),
                            ..config
                        };
                        let r = conservation_report(&c, &parsed_ic, *sample)
                            .expect("refined config stays valid");
                        (c.dt, r.energy_max_rel_drift, r.divergence_residual)
                    })
                    .collect()
            });
            let doc = NoetherRunDoc {
                config,
                initial_condition: ic.clone(),
                timestamp: now(cli.no_timestamp),
                samples: rep.samples,
                energy_max_rel_drift: rep.energy_max_rel_drift,
                energy_drift_rate: rep.energy_drift_rate,
                momentum_max_abs_drift: rep.momentum_max_abs_drift,
                boost_max_rel_drift: rep.boost_max_rel_drift,
                angular_momentum_max_drift: rep.angular_momentum_max_drift,
                divergence_residual: rep.divergence_residual,
                convergence,
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("doc serializes");
            text.push('\n');
            if let Err(e) = write_output(&cli.out, &text) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
    }
}

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use relspin::{Backend, GammaKind, TolerancePolicy};
use relspin_cli::commands::{cmd_boost, cmd_verify, cmd_wavefunction, write_csv, FieldSpec};
use relspin_cli::config::{RunConfig, DEFAULT_SEED, DEFAULT_TOLERANCE, DEFAULT_TRIALS};
use relspin_cli::grid::{parse_grid, ComplexNumber, Number};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "relspin",
    version,
    about = "Spinor, Lorentz and Dirac identity checks"
)]
struct Cli {
    /// Write the JSON result here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every randomized property suite and report deviations
    Verify(VerifyArgs),
    /// Boost matrix, metric, covector and Lorentz matrix for a momentum
    Boost(BoostArgs),
    /// Build psi(p) over a momentum grid and check the Dirac equation
    Wavefunction(WaveArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "float")]
    backend: BackendArg,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Base tolerance; matrix-product checks allow 100 times this
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    #[arg(long, hide = true)]
    corrupt_gamma: bool,
}

#[derive(Args)]
struct BoostArgs {
    #[arg(long, allow_hyphen_values = true)]
    mass: String,
    /// Covariant spatial momentum as X,Y,Z
    #[arg(long = "p", allow_hyphen_values = true)]
    p: String,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("field").required(true).args(["constant", "random"])))]
struct WaveArgs {
    #[arg(long, allow_hyphen_values = true)]
    mass: String,
    /// One momentum per line, three integer, a/b or decimal fields
    #[arg(long)]
    grid: PathBuf,
    /// Constant spinor as C1,C2; each entry a, bi or a+bi
    #[arg(long, allow_hyphen_values = true)]
    constant: Option<String>,
    /// Seeded random spinor at every grid point
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    /// Also write the grid points as CSV
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn split_fields(s: &str, n: usize, what: &str) -> anyhow::Result<Vec<String>> {
    let fields: Vec<String> = s.split(',').map(|f| f.trim().to_string()).collect();
    if fields.len() != n {
        bail!("{what} needs {n} comma-separated values, got {s:?}");
    }
    Ok(fields)
}

fn emit<T: Serialize>(value: &T, out: Option<&PathBuf>) -> anyhow::Result<()> {
    let mut json = serde_json::to_string_pretty(value)?;
    json.push('\n');
    match out {
        Some(path) => {
            fs::write(path, json).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout().write_all(json.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Verify(args) => {
            let cfg = RunConfig {
                backend: match args.backend {
                    BackendArg::Exact => Backend::Exact,
                    BackendArg::Float => Backend::Float,
                },
                seed: args.seed,
                trials: args.trials,
                policy: TolerancePolicy::uniform(args.tol)?,
                gammas: if args.corrupt_gamma {
                    GammaKind::Corrupted
                } else {
                    GammaKind::Standard
                },
            };
            let report = cmd_verify(&cfg);
            emit(&report, cli.out.as_ref())?;
            for name in report.failed_checks() {
                eprintln!("check failed: {name}");
            }
            Ok(report.passed)
        }
        Command::Boost(args) => {
            let mass: Number = args.mass.parse()?;
            let p = split_fields(&args.p, 3, "--p")?
                .iter()
                .map(|f| f.parse::<Number>())
                .collect::<Result<Vec<_>, _>>()?;
            let p: [Number; 3] = p.try_into().expect("three fields");
            emit(&cmd_boost(&mass, &p)?, cli.out.as_ref())?;
            Ok(true)
        }
        Command::Wavefunction(args) => {
            TolerancePolicy::uniform(args.tol)?;
            let mass: Number = args.mass.parse()?;
            let text = fs::read_to_string(&args.grid)
                .with_context(|| format!("reading {}", args.grid.display()))?;
            let grid =
                parse_grid(&text).with_context(|| format!("parsing {}", args.grid.display()))?;
            let field = match args.constant {
                Some(c) => {
                    let parts = split_fields(&c, 2, "--constant")?;
                    FieldSpec::Constant(Box::new([
                        parts[0].parse::<ComplexNumber>()?,
                        parts[1].parse::<ComplexNumber>()?,
                    ]))
                }
                None => FieldSpec::Random { seed: args.seed },
            };
            let output = cmd_wavefunction(&mass, &grid, &field, args.tol)?;
            emit(&output, cli.out.as_ref())?;
            if let Some(path) = &args.csv {
                let file = fs::File::create(path)
                    .with_context(|| format!("creating {}", path.display()))?;
                write_csv(&output, file).with_context(|| format!("writing {}", path.display()))?;
            }
            for p in output.points.iter().filter(|p| !p.passed) {
                eprintln!("residual {:e} at p = {:?}", p.residual, p.momentum);
            }
            Ok(output.passed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

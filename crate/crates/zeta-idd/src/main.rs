//! Thin argument-parsing shell around [`zeta_idd::cli`].

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use zeta_idd::analysis::{QuadratureConfig, Scheme};
use zeta_idd::cli::{self, Command, OutFormat, RunConfig};

#[derive(Parser)]
#[command(name = "zeta-idd", version, about = "Evaluate the explicit-formula function g by \
prime and zero data, build its Lévy measure and compound Poisson sampler, and run the \
numerical verification suites")]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Args)]
struct CommonArgs {
    /// Zero-ordinate table (falls back to $ZETA_IDD_ZEROS).
    #[arg(long)]
    zeros: Option<PathBuf>,
    /// Output format: csv or json (structured reports are always json).
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    format: OutFormat,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    t_min: f64,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    t_max: f64,
    #[arg(long, default_value_t = 101)]
    steps: usize,
}

#[derive(Args)]
struct FourierArgs {
    /// Evaluation points, e.g. --z 0+2i --z -3+1.5i.
    #[arg(long = "z", value_parser = parse_z, allow_hyphen_values = true)]
    z_points: Vec<zeta_idd::ComplexPoint>,
    #[arg(long, default_value_t = 16.0)]
    t_upper: f64,
    #[arg(long, default_value_t = 1e-10)]
    abs_tol: f64,
    /// adaptive-simpson or gauss-legendre.
    #[arg(long, default_value = "adaptive-simpson", value_parser = parse_scheme)]
    scheme: Scheme,
    #[arg(long, default_value_t = 64)]
    panels: usize,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Tabulate g on a t-grid (both routes when zeros are given).
    Eval {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Cross-route residuals |g_explicit - g_zero_sum| against the tail bound.
    Compare {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Verify ∫ g(t)e^{izt} dt = (1/z²) ξ'/ξ(1/2 - iz) at chosen z.
    VerifyFourier {
        #[command(flatten)]
        fourier: FourierArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Non-positivity scans of g plus the Bochner eigenvalue grid.
    CheckCf {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Serialize the Lévy measure and its admissibility report.
    Levy {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Draw compound Poisson samples from the measure.
    Sample {
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run every suite and emit one JSON summary.
    Report {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn parse_format(s: &str) -> Result<OutFormat, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_scheme(s: &str) -> Result<Scheme, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_z(s: &str) -> Result<zeta_idd::ComplexPoint, String> {
    cli::parse_complex(s).map_err(|e| format!("{e}"))
}

fn apply_common(config: &mut RunConfig, common: CommonArgs) {
    config.zeros_path = common.zeros;
    config.out_format = common.format;
    config.out_path = common.out;
}

fn apply_grid(config: &mut RunConfig, grid: GridArgs) {
    config.t_min = grid.t_min;
    config.t_max = grid.t_max;
    config.steps = grid.steps;
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match cli.command {
        CliCommand::Eval { grid, common } => {
            let mut config = RunConfig::new(Command::Eval);
            apply_grid(&mut config, grid);
            apply_common(&mut config, common);
            config
        }
        CliCommand::Compare { grid, common } => {
            let mut config = RunConfig::new(Command::Compare);
            apply_grid(&mut config, grid);
            apply_common(&mut config, common);
            config
        }
        CliCommand::VerifyFourier { fourier, common } => {
            let mut config = RunConfig::new(Command::VerifyFourier);
            if !fourier.z_points.is_empty() {
                config.z_points = fourier.z_points;
            }
            config.quadrature = QuadratureConfig {
                t_upper: fourier.t_upper,
                panels: fourier.panels,
                scheme: fourier.scheme,
                abs_tol: fourier.abs_tol,
            };
            apply_common(&mut config, common);
            config
        }
        CliCommand::CheckCf { grid, common } => {
            let mut config = RunConfig::new(Command::CheckCf);
            apply_grid(&mut config, grid);
            apply_common(&mut config, common);
            config
        }
        CliCommand::Levy { common } => {
            let mut config = RunConfig::new(Command::Levy);
            apply_common(&mut config, common);
            config
        }
        CliCommand::Sample { n, seed, common } => {
            let mut config = RunConfig::new(Command::Sample);
            config.n = n;
            config.seed = seed;
            apply_common(&mut config, common);
            config
        }
        CliCommand::Report {
            grid,
            n,
            seed,
            common,
        } => {
            let mut config = RunConfig::new(Command::Report);
            apply_grid(&mut config, grid);
            config.n = n;
            config.seed = seed;
            config.z_points = vec![
                cli::parse_complex("0+2i").expect("static literal"),
                cli::parse_complex("1+2i").expect("static literal"),
                cli::parse_complex("-3+1.5i").expect("static literal"),
            ];
            apply_common(&mut config, common);
            config
        }
    };
    ExitCode::from(cli::run(&config))
}

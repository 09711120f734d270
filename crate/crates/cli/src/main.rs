use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

mod finite;
mod real;
mod report;

use finite::{Property, WitnessMode};
use report::{Format, Report};

/// Separation properties of finite generalized topological spaces and of
/// the generalized topologies on the real line.
#[derive(Debug, Parser)]
#[command(name = "gtsep", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,

    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axioms of a family of open sets.
    Validate { file: PathBuf },
    /// Separation profile, Urysohn and Tietze verdicts, effective and
    /// U-normality.
    Props {
        file: PathBuf,
        #[arg(long, default_value_t = gtsep::urysohn::DEFAULT_U_NORMAL_MAX)]
        u_normal_max: usize,
    },
    /// Separating function for one pair of disjoint closed sets.
    Witness {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value = "gul")]
        mode: WitnessMode,
    },
    /// The topology generated by a strong space.
    Tau { file: PathBuf },
    /// Product of two strong spaces.
    Product { left: PathBuf, right: PathBuf },
    /// Every strong space on a number of points.
    Census {
        #[arg(long)]
        points: usize,
        #[arg(long = "where", value_enum)]
        filter: Option<Property>,
        /// Write matching spaces here, one JSON document per line.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Constructions on the real line.
    Real {
        #[command(subcommand)]
        command: real::RealCommand,
    },
}

fn dispatch(command: &Command) -> anyhow::Result<Report> {
    match command {
        Command::Validate { file } => finite::validate(file),
        Command::Props { file, u_normal_max } => finite::props(file, *u_normal_max),
        Command::Witness { file, a, b, mode } => finite::witness(file, a, b, *mode),
        Command::Tau { file } => finite::tau(file),
        Command::Product { left, right } => finite::product(left, right),
        Command::Census { points, filter, out } => finite::census_verb(*points, *filter, out.as_deref()),
        Command::Real { command } => real::run(command),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let start = Instant::now();
    match dispatch(&cli.command) {
        Ok(mut report) => {
            if cli.timing {
                report.set("elapsed_ms", start.elapsed().as_secs_f64() * 1000.0);
            }
            print!("{}", report.render(cli.format));
            ExitCode::from(report.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

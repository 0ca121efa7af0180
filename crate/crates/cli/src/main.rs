mod commands;
mod job;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use job::{CliResult, Job};

const JOB_HELP: &str = "\
Job file keys:
  p            prime modulus
  s, t         derivative orders per point, message dimension
  alphas       evaluation points (defaults to 0..r when only r is given)
  r            number of points (optional if alphas is given)
  multipliers  optional s x r matrix of nonzero column multipliers
  poly         message coefficients, LOW-TO-HIGH: [5,2,3,1] is X^3 + 3X^2 + 2X + 5
  matrix       s rows of r entries, row i holding order-i derivatives, or an
               object {\"s\":..,\"r\":..,\"entries\":[[..],..]}
  e            decoding radius (decode; defaults to floor((rs - t) / 2))
  weight       NRT weight of the injected error (corrupt, simulate)
  trials       trials per weight (simulate; default 1000)
  seed         RNG seed (corrupt, simulate; --seed takes precedence)
  budget       enumeration budget (mindist)

Integers outside [0, p) are reduced mod p with a warning.
Exit codes: 0 result computed (a failed decode included), 2 invalid input,
3 enumeration budget exceeded.";

/// Hyperderivative Reed-Solomon codes under the NRT metric.
///
/// Polynomials are always written as coefficient lists from low to high
/// degree.
#[derive(Parser, Debug)]
#[command(name = "hrs", version, after_long_help = JOB_HELP)]
struct Cli {
    /// JSON job file, or `-` for stdin.
    #[arg(long, global = true, value_name = "PATH")]
    job: Option<PathBuf>,

    /// Override a job key; the value is read as JSON, else as a string.
    #[arg(long = "param", global = true, value_name = "KEY=VALUE")]
    params: Vec<String>,

    /// RNG seed for corrupt and simulate; overrides the job's `seed`.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Where to write the result; `-` is stdout.
    #[arg(long, global = true, value_name = "PATH|-", default_value = "-")]
    output: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Encode `poly` (coefficients low-to-high) into an s x r codeword matrix.
    Encode,
    /// Decode `matrix`, printing the message (low-to-high) or the failure reason.
    Decode,
    /// Add a uniformly random error of NRT weight `weight` to `matrix`.
    Corrupt,
    /// Recover the polynomial (low-to-high, degree < rs) from derivative data.
    Interpolate,
    /// Monte Carlo decoding trials, one CSV row per error weight.
    Simulate,
    /// Exhaustive minimum NRT distance and the comparison with rs - t + 1.
    Mindist,
}

fn run(cli: &Cli) -> CliResult<String> {
    let job = Job::load(cli.job.as_deref(), &cli.params)?;
    let seed = match cli.seed {
        Some(seed) => seed,
        None => job.opt_u64("seed")?.unwrap_or(0),
    };
    match cli.command {
        Command::Encode => commands::encode(&job),
        Command::Decode => commands::decode_cmd(&job),
        Command::Corrupt => commands::corrupt(&job, seed),
        Command::Interpolate => commands::interpolate(&job),
        Command::Simulate => commands::simulate(&job, seed),
        Command::Mindist => commands::mindist(&job),
    }
}

fn emit(target: &str, text: &str) -> std::io::Result<()> {
    if target == "-" {
        let mut out = std::io::stdout().lock();
        writeln!(out, "{text}")
    } else {
        fs::write(target, format!("{text}\n"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| Ok(emit(&cli.output, &text)?));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

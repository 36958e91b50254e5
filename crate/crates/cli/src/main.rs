use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cubix::cache::{self, Cache};
use cubix::commands::{self, exit, BallCommand, EnumKind, Failure};
use cubix::report::{self, Format, Status};
use cubix::suites::{Options, SuiteName};

#[derive(Debug, Parser)]
#[command(name = "cubix", version, about = "Eisenstein lattice, O(5,3), W(E6) and ball computations")]
struct Cli {
    /// Coordinate modulus bound for lattice vector enumerations.
    #[arg(long, global = true, default_value_t = 2)]
    height: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Hyperplane membership tolerance.
    #[arg(long, global = true, default_value_t = cubix_core::ball::DEFAULT_MEMBERSHIP_TOL)]
    tol: f64,
    /// Directory for cached group enumerations (overridden by CUBIX_CACHE).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Worker threads for group closures.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Maximum group size a closure may reach.
    #[arg(long, global = true, default_value_t = cubix_core::closure::DEFAULT_CAP)]
    cap: usize,
    /// Seed for the randomized invariance checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run an invariant suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: SuiteName,
    },
    /// List a canonical family with its count.
    Enum {
        #[arg(value_enum)]
        kind: EnumKind,
    },
    /// Ball geometry queries.
    Ball {
        #[command(subcommand)]
        cmd: BallCommand,
    },
    /// Milnor number and monodromy of x1^a1 + ... + xn^an.
    Milnor {
        /// Comma-separated exponents, each at least 2.
        #[arg(long, allow_hyphen_values = true)]
        exponents: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => exit::OK,
                _ => exit::USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };

    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("cubix: --jobs must be at least 1");
            return ExitCode::from(exit::USAGE as u8);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }

    let opts = Options {
        height: cli.height,
        tol: cli.tol,
        cap: cli.cap,
        seed: cli.seed,
        cache: Cache::new(cache::resolve_dir(cli.cache.clone())),
    };

    let outcome = match &cli.command {
        Command::Verify { suite } => commands::verify(*suite, &opts),
        Command::Enum { kind } => commands::enumerate(*kind, cli.height),
        Command::Ball { cmd } => commands::ball_command(cmd, cli.height, cli.tol),
        Command::Milnor { exponents } => commands::milnor_command(exponents),
    };

    match outcome {
        Ok(r) => {
            print!("{}", report::render(&r, cli.format));
            if r.status == Status::Fail {
                ExitCode::from(exit::VERIFY_FAILED as u8)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure { code, message }) => {
            eprintln!("cubix: {message}");
            ExitCode::from(code as u8)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use boolfactor::factor::Method;
use boolfactor::satsolve::DEFAULT_BUDGET;
use boolfactor_cli::bench::BenchConfig;
use boolfactor_cli::{commands, Flags, Outcome};

#[derive(Parser)]
#[command(
    name = "boolfactor",
    version,
    about = "Generic-integer division, Boolean factoring and scarce-equation solving"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Working width (division), modulus width (inverse) or product width
    /// (MBF). Overrides GENERIC_INT_WIDTH.
    #[arg(long, global = true)]
    width: Option<usize>,
    /// Seed for the randomised self-test sample.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Assignments the solver may try per equation.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Bf,
    Mbf,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Bf => Method::Bf,
            MethodArg::Mbf => Method::Mbf,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Lopsided division of A by odd B, shown as a tableau.
    Divide {
        #[arg(allow_hyphen_values = true)]
        a: i128,
        b: i128,
        /// Number of steps; defaults to max(1, 1 + lgth(A) - lgth(B)).
        #[arg(long)]
        steps: Option<usize>,
    },
    /// The inverse of odd B modulo 2^width (default width 8).
    Inverse { b: i128 },
    /// Factors N by Boolean factoring.
    Factor {
        n: u64,
        #[arg(long, value_enum, default_value = "bf")]
        method: MethodArg,
        /// Search every level instead of stopping at the first factor.
        #[arg(long)]
        enumerate_all: bool,
        /// Report the divisors 1 and N too.
        #[arg(long)]
        include_trivial: bool,
        /// Write the Boolean system of the last level searched as JSON.
        #[arg(long, value_name = "PATH")]
        emit_system: Option<PathBuf>,
    },
    /// Solves the ANF equation EXPR = 1.
    Solve {
        expr: String,
        /// List every solution, not just the first.
        #[arg(long)]
        all: bool,
    },
    /// Writes traces or systems as JSON.
    Export {
        #[command(subcommand)]
        what: Export,
    },
    /// Factors every odd N in FROM..=TO and records timings.
    Bench {
        from: u64,
        to: u64,
        #[arg(long, value_enum, default_value = "bf")]
        method: MethodArg,
        /// Runs per N; the fastest is recorded.
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Checks the built-in golden examples.
    Selftest,
}

#[derive(Subcommand)]
enum Export {
    /// The division trace of A by B.
    Trace {
        #[arg(allow_hyphen_values = true)]
        a: i128,
        b: i128,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// The level-J BF system of odd N.
    System {
        n: u64,
        #[arg(long, default_value_t = 0)]
        level: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let flags = Flags {
        json: cli.json,
        width: cli.width,
        seed: cli.seed,
        budget: cli.budget,
    };
    let outcome: Outcome = match cli.command {
        Command::Divide { a, b, steps } => commands::cmd_divide(a, b, steps, &flags),
        Command::Inverse { b } => commands::cmd_inverse(b, &flags),
        Command::Factor {
            n,
            method,
            enumerate_all,
            include_trivial,
            emit_system,
        } => commands::cmd_factor(
            n,
            method.into(),
            enumerate_all,
            include_trivial,
            emit_system.as_deref(),
            &flags,
        ),
        Command::Solve { expr, all } => commands::cmd_solve(&expr, all, &flags),
        Command::Export { what } => match what {
            Export::Trace { a, b, steps } => commands::cmd_export_trace(a, b, steps, &flags),
            Export::System { n, level } => commands::cmd_export_system(n, level),
        },
        Command::Bench {
            from,
            to,
            method,
            repeats,
            csv,
        } => {
            let width = match flags.resolved_width() {
                Ok(w) => w,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(commands::EXIT_ERROR);
                }
            };
            let config = BenchConfig {
                method: method.into(),
                repeats,
                budget: flags.budget,
                width,
            };
            boolfactor_cli::cmd_bench(from, to, &config, csv.as_deref(), &flags)
        }
        Command::Selftest => boolfactor_cli::cmd_selftest(&flags),
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code)
}

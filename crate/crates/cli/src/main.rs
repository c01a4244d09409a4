use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use quartic_cli::{exit, CliError, SolveArgs, TableArgs, TableFormat, THREADS_ENV};
use quartic_core::{builtin_families, Method};

#[derive(Parser)]
#[command(
    name = "quartic",
    version,
    about = "Parametric families and exhaustive search for A^4 + h*B^4 = C^4 + h*D^4"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Threads {
    /// Worker threads (0 = one per core)
    #[arg(long, env = THREADS_ENV, default_value_t = 0)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Symbolically verify every builtin family
    Verify {
        #[arg(long)]
        json: bool,
    },
    /// Find solutions for one h
    Solve {
        #[arg(long)]
        h: BigInt,
        /// Largest component value searched
        #[arg(long, default_value_t = 100)]
        bound: u32,
        /// Search method used with --all
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// List every solution at the bound instead of the smallest one
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        threads: Threads,
    },
    /// List builtin family parameters that produce h
    Match {
        #[arg(long)]
        h: BigInt,
        #[arg(long)]
        json: bool,
    },
    /// Build a solution table over a range of h
    Table {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = 100)]
        bound: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        threads: Threads,
    },
    /// Print the family catalog as JSON
    Catalog,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Mitm,
    Brute,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Mitm => Method::Mitm,
            MethodArg::Brute => Method::Brute,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match cli.command {
        Command::Verify { json } => quartic_cli::verify(builtin_families(), json, &mut out)?,
        Command::Solve {
            h,
            bound,
            method,
            all,
            json,
            threads,
        } => quartic_cli::solve(
            &SolveArgs {
                h,
                bound,
                method: method.into(),
                all,
                json,
                threads: threads.threads,
            },
            &mut out,
        )?,
        Command::Match { h, json } => quartic_cli::match_cmd(&h, json, &mut out)?,
        Command::Table {
            from,
            to,
            bound,
            format,
            out: path,
            threads,
        } => quartic_cli::table(
            &TableArgs {
                from,
                to,
                bound,
                format: match format {
                    FormatArg::Csv => TableFormat::Csv,
                    FormatArg::Json => TableFormat::Json,
                },
                out: path,
                threads: threads.threads,
            },
            &mut out,
            &mut io::stderr(),
        )?,
        Command::Catalog => quartic_cli::catalog(&mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(exit::USAGE),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

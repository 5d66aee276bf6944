//! `anosov` — construct and certify Anosov automorphisms of nilpotent Lie
//! algebras with exact arithmetic.

mod commands;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "anosov",
    version,
    about = "Exact construction and certification of Anosov automorphisms of nilpotent Lie algebras",
    after_help = "Exit codes: 0 = success / anosov, 1 = a check failed, 2 = input error.\n\
                  Files are JSON with 1-based indices and rationals as strings (\"p/q\" or \"n\")."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra file: Jacobi, grading, central series, abelian
    /// factor, dimension bound.
    Validate {
        path: PathBuf,
        /// Machine-readable report on stdout.
        #[arg(long)]
        json: bool,
    },
    /// Double a graded algebra and certify the resulting integer
    /// automorphism. Writes <base>.algebra.json, <base>.matrix.json and
    /// <base>.certificate.json.
    Double {
        path: PathBuf,
        /// Construction parameter; the automorphism blocks are powers of
        /// [[a, a²−1], [1, a]].
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(2..))]
        a: i64,
        /// Rescale the basis first if structure constants are not integers.
        #[arg(long)]
        scale: bool,
        /// Output base path (default: next to the input).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a user-supplied automorphism candidate against an algebra.
    Certify {
        algebra: PathBuf,
        matrix: PathBuf,
        /// Also write the certificate to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a catalog algebra (and its automorphism matrix when one is
    /// built in).
    Example {
        /// One of: heisenberg3, filiform, seven_dim_family, eight_dim,
        /// free_two_step.
        name: Option<String>,
        /// Family parameter for filiform / seven_dim_family.
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// Number of copies for free_two_step.
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// Construction parameter for eight_dim.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(2..))]
        a: i64,
        /// Output base path, or output directory with --all.
        #[arg(long)]
        out: Option<PathBuf>,
        /// List the catalog with parameter ranges.
        #[arg(long)]
        list: bool,
        /// Write the whole catalog grid into `--out` (a directory).
        #[arg(long)]
        all: bool,
    },
    /// Re-run every exact check of a certificate from the file alone and
    /// compare against the recorded claims.
    Recheck { path: PathBuf },
    /// Pretty-print a certificate file.
    Report { path: PathBuf },
}

fn run(cli: Cli) -> Result<i32, format::FormatError> {
    match cli.command {
        Command::Validate { path, json } => commands::cmd_validate(&path, json),
        Command::Double { path, a, scale, out } => {
            commands::cmd_double(&path, a, scale, out.as_deref())
        }
        Command::Certify {
            algebra,
            matrix,
            out,
        } => commands::cmd_certify(&algebra, &matrix, out.as_deref()),
        Command::Example {
            name,
            k,
            r,
            a,
            out,
            list,
            all,
        } => commands::cmd_example(name.as_deref(), k, r, a, out.as_deref(), list, all),
        Command::Recheck { path } => commands::cmd_recheck(&path),
        Command::Report { path } => commands::cmd_report(&path),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(u8::try_from(code).unwrap_or(1)),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

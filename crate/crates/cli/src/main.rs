use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gieseker_cli::{verify, Params, Suite};

#[derive(Parser)]
#[command(
    name = "gieseker",
    version,
    about = "Exact verification suites for Gieseker fixed-point algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite.
    Verify {
        suite: Suite,
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=64))]
        n: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// Polynomial-degree window for the appendix suite.
        #[arg(long)]
        cutoff: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Parameter point such as `kappa=1/2,a1=-3`.
        #[arg(long)]
        point: Option<String>,
        /// Write the report to a file in `--format`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dump_matrices: bool,
        /// Machine-readable format; printed instead of the summary when `--out` is absent.
        #[arg(long)]
        format: Option<Format>,
        /// Include wall-clock times in the report.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let Command::Verify {
        suite,
        n,
        r,
        cutoff,
        seed,
        point,
        out,
        dump_matrices,
        format,
        timings,
    } = Cli::parse().command;
    let params = Params {
        n: n as usize,
        r,
        cutoff,
        seed,
        point,
        dump_matrices,
    };
    let mut report = match verify(suite, params) {
        Ok(rep) => rep,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if !timings {
        report.strip_timings();
    }
    let render = |f: Format| -> Result<String, String> {
        match f {
            Format::Json => Ok(report.to_json()),
            Format::Csv => report.to_csv().map_err(|e| e.to_string()),
        }
    };
    let result = match (&out, format) {
        (Some(path), f) => render(f.unwrap_or(Format::Json))
            .and_then(|s| std::fs::write(path, s).map_err(|e| format!("{}: {e}", path.display())))
            .map(|()| print!("{}", report.human())),
        (None, Some(f)) => render(f).map(|s| print!("{s}")),
        (None, None) => {
            print!("{}", report.human());
            Ok(())
        }
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

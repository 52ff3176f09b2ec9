//! `interval-dft`: amplitude-spectrum bounds for interval signals read from
//! CSV.

mod error;
mod ingest;
mod output;
mod plot;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use crate::ingest::Schema;
use crate::output::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Selective,
    Box,
    Brute,
    /// Selective and box, plus a per-frequency comparison file.
    Both,
}

#[derive(Debug, Parser)]
#[command(name = "interval-dft", version, about = "Guaranteed amplitude-spectrum bounds for interval signals")]
pub struct Args {
    /// Input CSV, one sample per row; a non-numeric first row is a header.
    #[arg(long)]
    pub input: PathBuf,

    #[arg(long, value_enum, default_value_t = Schema::LoHi)]
    pub schema: Schema,

    /// Half-width added on both sides of each value (`--schema value` only).
    #[arg(long, allow_negative_numbers = true)]
    pub precision: Option<f64>,

    #[arg(long, value_enum, default_value_t = MethodArg::Selective)]
    pub method: MethodArg,

    /// First frequency index [default: 1].
    #[arg(long)]
    pub k_min: Option<usize>,

    /// Last frequency index, at most N/2 [default: N/2 - 1].
    #[arg(long)]
    pub k_max: Option<usize>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Also write `<output>.svg` with the bound curves.
    #[arg(long)]
    pub plot: bool,

    /// Lower bound from the nearest hull vertex instead of the nearest point
    /// of the hull (compatibility mode; may overstate the bound).
    #[arg(long)]
    pub paper_compat_min: bool,

    /// Monte-Carlo samples for the verification report; 0 disables it.
    #[arg(long, default_value_t = 0)]
    pub mc_samples: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Output path stem; method and format suffixes are appended.
    #[arg(long)]
    pub output: PathBuf,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run::run(&args) {
        Ok(written) => {
            for path in written {
                println!("{}", path.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

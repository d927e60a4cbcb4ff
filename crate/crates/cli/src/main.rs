//! `wedmatch`: find the fragments of a text within weighted edit distance `k`
//! of a pattern.

mod cmd;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wedmatch::Algo;

#[derive(Parser, Debug)]
#[command(name = "wedmatch", version, about = "Pattern matching with weighted edits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report every start of an occurrence.
    Match {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = AlgoArg::Nk)]
        algo: AlgoArg,
        /// `starts`: one start per line; `full`: start, end and distance.
        #[arg(long, value_enum, default_value_t = Report::Starts)]
        report: Report,
    },
    /// Report every occurrence as `start<TAB>end<TAB>distance`.
    List {
        #[command(flatten)]
        input: Input,
    },
    /// Report starts within an inclusive interval with their distances.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Inclusive start range `L:R`.
        #[arg(long, value_name = "L:R")]
        interval: String,
    },
    /// Time the solvers on generated instances and print CSV.
    Bench {
        /// Comma-separated `n:m:k` triples.
        #[arg(long, default_value = "10000:5000:4")]
        sizes: String,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Comma-separated solver names.
        #[arg(long, default_value = "sellers,banded,nk")]
        algos: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = 4)]
        alphabet_size: usize,
    },
    /// Write a random text and a mutated pattern cut from it.
    Gen {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        pattern_length: usize,
        #[arg(long, default_value_t = 4)]
        alphabet_size: usize,
        #[arg(long, default_value_t = 0.0)]
        mutation_rate: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        pattern: PathBuf,
        #[arg(long, value_name = "FILE")]
        text: PathBuf,
    },
}

/// Files and threshold shared by the matching commands.
#[derive(Args, Debug)]
struct Input {
    #[arg(long, value_name = "FILE")]
    pattern: PathBuf,
    #[arg(long, value_name = "FILE")]
    text: PathBuf,
    /// Threshold as a decimal with at most six fractional digits.
    #[arg(short = 'k', value_name = "DEC")]
    k: String,
    /// Weight file: `SRC<TAB>DST<TAB>COST` lines; unlisted pairs cost 1.
    #[arg(long, value_name = "FILE")]
    weights: Option<PathBuf>,
    /// Worker threads for text chunks; 1 is the sequential reference.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgoArg {
    Sellers,
    Banded,
    Nk,
}

impl From<AlgoArg> for Algo {
    fn from(a: AlgoArg) -> Algo {
        match a {
            AlgoArg::Sellers => Algo::Sellers,
            AlgoArg::Banded => Algo::Banded,
            AlgoArg::Nk => Algo::Nk,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Report {
    Starts,
    Full,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match cmd::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("wedmatch: {e}");
            ExitCode::from(e.code())
        }
    }
}

//! `semiinf`: runs verification suites and prints `KEY VALUE` reports.
//! Exit status is 0 when every check passes, 1 on a failed check and 2 on
//! a usage error.

mod suites;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use suites::{Config, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Marks,
    Weyl,
    Char,
    Bgg,
    TwistedBgg,
    SiWindow,
    Clifford,
    Semiregular,
    All,
}

#[derive(Parser, Debug)]
#[command(
    name = "semiinf",
    version,
    about = "Exact checks for affine Weyl groups, BGG-type characters, Clifford and semiregular modules"
)]
struct Cli {
    /// Suite to run; defaults to `all`.
    #[arg(value_enum)]
    suite: Option<Suite>,

    /// Same as the positional suite.
    #[arg(long = "suite", value_name = "SUITE", value_enum, conflicts_with = "suite")]
    suite_flag: Option<Suite>,

    /// Finite type whose untwisted affinization is used, e.g. A1, A2, C2, G2.
    #[arg(long = "type", value_name = "TYPE", default_value = "A1")]
    type_name: String,

    /// Affine Cartan matrix file, one row per line; overrides `--type`.
    #[arg(long)]
    matrix_file: Option<PathBuf>,

    /// Highest weight: `m0,m1,...,mr[;n]` or a sum such as `Λ0`, `2L0+L1`.
    #[arg(long, default_value = "L0")]
    lambda: String,

    /// Height truncation of characters.
    #[arg(long = "N", value_name = "N", default_value_t = 8)]
    n_trunc: i64,

    /// Length bound for Weyl group balls and PBW words.
    #[arg(long, default_value_t = 3)]
    maxlen: usize,

    /// Box size for the semi-infinite searches.
    #[arg(long, default_value_t = 4)]
    search_bound: i64,

    /// Number of steps of the limit schedule.
    #[arg(long, default_value_t = 6)]
    horizon: usize,

    /// Number of Clifford generators.
    #[arg(long, default_value_t = 3)]
    n: usize,

    /// Graded Lie algebra: `sl2`, `heisenberg`, `abelian` or a file path.
    #[arg(long, default_value = "heisenberg")]
    algebra: String,

    /// Degree bound for the semiregular truncations.
    #[arg(long, default_value_t = 4)]
    degree: i64,

    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let suite = cli.suite.or(cli.suite_flag).unwrap_or(Suite::All);
    let config = Config {
        type_name: cli.type_name,
        matrix_file: cli.matrix_file,
        lambda: cli.lambda,
        n_trunc: cli.n_trunc,
        maxlen: cli.maxlen,
        search_bound: cli.search_bound,
        horizon: cli.horizon,
        clifford_n: cli.n,
        algebra: cli.algebra,
        degree: cli.degree,
    };
    let mut report = Report::default();
    if let Err(e) = suites::run(suite, &config, &mut report) {
        eprintln!("semiinf: {e}");
        return ExitCode::from(2);
    }
    let text = report.finish();
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("semiinf: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

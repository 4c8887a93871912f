use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ennola_core::verify::{CheckSelector, ConventionChoice, IntRange, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(
    name = "ennola",
    version,
    about = "Exact verification harness for power-sum polynomial identities"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Sign convention for `R_{a,b}`.
    #[arg(long, global = true, value_enum, default_value_t = Convention::Plus)]
    pub convention: Convention,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Plus,
    Minus,
    Both,
}

impl From<Convention> for ConventionChoice {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Plus => ConventionChoice::Plus,
            Convention::Minus => ConventionChoice::Minus,
            Convention::Both => ConventionChoice::Both,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one polynomial in canonical text form.
    Show(ShowArgs),
    /// Run a check over a parameter range.
    Check(CheckArgs),
    /// Unit checks for the cubic family `X^3 + (l-1)X^2 - lX - 1`.
    Ennola(EnnolaArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Object {
    /// `P_d(X, Y)`
    Pd,
    /// Newton power sum `f_d(s1, s2, s3)`
    F,
    /// `S_{a,b}(T)`
    S,
    /// `R_{a,b}(T)`
    R,
    /// `E_{a,b}(T)`
    E,
    /// `R_{a,b,m}(T)`
    Rm,
    /// `F_{a,b}(X, Y)`
    Fab,
    /// `G_{a,b}(T)`
    G,
    /// `G_{a,b,m}(T)`
    Gm,
}

#[derive(Debug, Args)]
pub struct ShowArgs {
    #[arg(value_enum)]
    pub object: Object,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
}

fn parse_range(s: &str) -> Result<IntRange, String> {
    s.parse().map_err(|e: ennola_core::Error| e.to_string())
}

fn parse_selector(s: &str) -> Result<CheckSelector, String> {
    s.parse().map_err(|e: ennola_core::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// prop2 | integrality | corollary1 | conj14 | g-closed | conj20 |
    /// audit-degrees | decomposition | ennola | all
    #[arg(value_parser = parse_selector)]
    pub selector: CheckSelector,
    /// Index range, `N` or `LO..HI`.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub d: Option<IntRange>,
    /// Shorthand for `--d 1..N`.
    #[arg(long, conflicts_with = "d")]
    pub d_max: Option<i64>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub a: Option<IntRange>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub b: Option<IntRange>,
    /// Shorthand for `--a 1..N --b 1..N` (`-N..N` for conj14).
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub max: Option<i64>,
    #[arg(long, value_parser = parse_range)]
    pub l: Option<IntRange>,
    /// Number of random corollary1 instances.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Override `m = a^2 + ab + b^2` in conj20 (odd, >= 3).
    #[arg(long)]
    pub m: Option<i64>,
}

impl CheckArgs {
    pub fn has_ranges(&self) -> bool {
        self.d.is_some()
            || self.d_max.is_some()
            || self.a.is_some()
            || self.b.is_some()
            || self.max.is_some()
            || self.l.is_some()
            || self.m.is_some()
    }
}

#[derive(Debug, Args)]
pub struct EnnolaArgs {
    /// `N` or `LO..HI`.
    #[arg(long, value_parser = parse_range)]
    pub l: IntRange,
    /// Also print both minimal polynomials for each `l` (text format only).
    #[arg(long)]
    pub print: bool,
}

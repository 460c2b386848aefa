use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::select::{IndexRange, Selection};

#[derive(Debug, Parser)]
#[command(name = "akcheck", version, about = "Verify congruences for partitions with colored odd parts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a_k(n) modulo m, one row per n.
    Coeffs(CoeffsArgs),
    /// Run a verification and emit a report.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    /// Number of colors for odd parts.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    /// A single n or an inclusive range such as 0-30.
    #[arg(long)]
    pub n: IndexRange,
    #[arg(long, default_value_t = 3)]
    pub modulus: u32,
    /// Also print exact values where the enumeration oracle reaches.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Worker threads; 0 uses every core, 1 runs sequentially.
    #[arg(long, env = "AKCHECK_WORKERS", default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// a_{27j+3t+2}(27n + 18 + t) = 0 (mod 3), with alpha = 9j + t.
    Base(BaseArgs),
    /// The internal congruence through the Sturm bound.
    Internal(InternalArgs),
    /// a_{3alpha+2}(3^{2k+3} n + delta_k) = 0 (mod 3).
    Family(FamilyArgs),
    /// a_11 progressions modulo 5, 7 and 11, plus their support lemmas.
    Ramanujan(RamanujanArgs),
    /// Modularity conditions of an eta quotient.
    EtaCheck(EtaCheckArgs),
    /// Sturm bound for a weight and level, or for family parameters.
    Sturm(SturmArgs),
    /// Direct search for alpha admitting the internal congruence.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct BaseArgs {
    /// Alpha values: a list like 1,4,7-9, or theorem-list, or all.
    #[arg(long, default_value = "0-26")]
    pub alpha: Selection,
    #[arg(long, default_value_t = 50)]
    pub n_max: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct InternalArgs {
    #[arg(long, default_value = "theorem-list")]
    pub alpha: Selection,
    /// Number of post-Hecke coefficients to compare. Refused below the Sturm minimum.
    #[arg(long)]
    pub precision: Option<usize>,
    /// Raise the eta(z) exponent A by 24 times this.
    #[arg(long, default_value_t = 0)]
    pub a_lift: u64,
    /// Check the congruence on coefficients only, up to --n-max.
    #[arg(long)]
    pub direct: bool,
    /// Range of the direct coefficient check.
    #[arg(long, default_value_t = akcong::prover::DIRECT_CHECK_LIMIT)]
    pub n_max: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, default_value = "theorem-list")]
    pub alpha: Selection,
    /// Family members, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub k: Vec<u32>,
    #[arg(long, default_value_t = 50)]
    pub n_max: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct RamanujanArgs {
    #[arg(long, default_value_t = 5000)]
    pub n_max: u64,
    /// Primes to check, out of 5, 7, 11.
    #[arg(long, value_delimiter = ',', default_value = "5,7,11")]
    pub modulus: Vec<u32>,
    /// Skip the f1^3 support and CRT checks.
    #[arg(long)]
    pub skip_support: bool,
    #[arg(long, default_value_t = akcong::ramanujan::SUPPORT_PRECISION)]
    pub support_precision: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct EtaCheckArgs {
    /// Check g1 and g2 for these alpha instead of an explicit quotient.
    #[arg(long, conflicts_with_all = ["level", "r", "e4"])]
    pub alpha: Option<Selection>,
    #[arg(long, requires = "r")]
    pub level: Option<u64>,
    /// Exponents as d:r pairs, e.g. 1:184,2:4.
    #[arg(long, requires = "level")]
    pub r: Option<String>,
    /// Power of E4 multiplying the quotient.
    #[arg(long, default_value_t = 0)]
    pub e4: u64,
    #[arg(long, default_value_t = 0, requires = "alpha")]
    pub a_lift: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SturmArgs {
    #[arg(long, conflicts_with_all = ["weight", "level"])]
    pub alpha: Option<Selection>,
    #[arg(long, requires = "level")]
    pub weight: Option<i64>,
    #[arg(long, requires = "weight")]
    pub level: Option<u64>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value = "0-63")]
    pub alpha: Selection,
    #[arg(long, default_value_t = 50)]
    pub n_max: u64,
    #[command(flatten)]
    pub common: Common,
}

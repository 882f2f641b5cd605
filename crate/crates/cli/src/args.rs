use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "ceda", version, about = "Colored Eulerian descent algebra toolkit")]
pub struct Cli {
    #[command(flatten)]
    pub config: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize, PartialEq, Eq)]
pub struct GlobalArgs {
    /// Number of colors.
    #[arg(long, env = "CEDA_R", global = true)]
    pub r: Option<u32>,

    /// Permutation length.
    #[arg(long, env = "CEDA_N", global = true)]
    pub n: Option<usize>,

    /// Image bound j: a single value `J` (meaning 0..J) or a range `a..b` (inclusive).
    #[arg(long, env = "CEDA_J", global = true, value_parser = parse_range)]
    pub j: Option<Range>,

    /// Bar count k, same syntax as `--j`.
    #[arg(long, env = "CEDA_K", global = true, value_parser = parse_range)]
    pub k: Option<Range>,

    #[arg(long, env = "CEDA_SEED", global = true, default_value_t = 42)]
    pub seed: u64,

    /// Number of random cases for seeded suites.
    #[arg(long, env = "CEDA_CASES", global = true, default_value_t = 100)]
    pub cases: usize,

    #[arg(long, env = "CEDA_FORMAT", global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory for cached structure-constant tensors.
    #[arg(long, env = "CEDA_CACHE", global = true)]
    pub cache: Option<PathBuf>,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, env = "CEDA_JOBS", global = true)]
    pub jobs: Option<usize>,

    /// Refuse to enumerate groups larger than this.
    #[arg(long, env = "CEDA_MAX_GROUP_SIZE", global = true, default_value_t = 10_000_000)]
    pub max_group_size: u128,

    /// Leave the wall-clock duration out of reports, making them byte-identical across runs.
    #[arg(long, env = "CEDA_OMIT_TIMING", global = true)]
    pub omit_timing: bool,

    /// Write the artifact (table, series, values) to this file as JSON.
    #[arg(long, env = "CEDA_OUTPUT", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Range {
    pub lo: u32,
    pub hi: u32,
}

impl Range {
    pub fn values(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

pub fn parse_range(s: &str) -> Result<Range, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("`{t}` is not a nonnegative integer"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => (0, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(Range { lo, hi })
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every element of G(r, n) with its descent statistics.
    Enumerate,
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Also check by full group-algebra convolution (phi suite).
        #[arg(long)]
        naive: bool,
    },
    /// Colored Eulerian idempotents by descent class.
    Idempotents,
    /// Number of elements of G(r, n) with d descents, d = 0..n.
    EulerianPoly,
    /// Order polynomial values over the `--j` grid.
    OrderPoly {
        /// Permutation in one-line notation, e.g. "2_1 1_1".
        #[arg(long, conflicts_with = "poset")]
        pi: Option<String>,
        /// Poset JSON file.
        #[arg(long)]
        poset: Option<PathBuf>,
        /// Use the chain on π detached from the anchors.
        #[arg(long, requires = "pi")]
        detached: bool,
        /// Also count P-partitions by brute force and compare.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Structure constants of a class partition whose class sums are closed.
    StructureConstants {
        #[arg(long, value_enum, default_value_t = PartitionArg::Des)]
        partition: PartitionArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Ftcpp,
    OrderPoly,
    Zigzag,
    Chain,
    Barred,
    Steingrimsson,
    ClosureDes,
    ClosureMr,
    ClosureDesset,
    Phi,
    Idempotents,
    Variants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionArg {
    Des,
    Mr,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..3"), Ok(Range { lo: 0, hi: 3 }));
        assert_eq!(parse_range("1..=2"), Ok(Range { lo: 1, hi: 2 }));
        assert_eq!(parse_range("4"), Ok(Range { lo: 0, hi: 4 }));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn cli_is_well_formed() {
        Cli::command().debug_assert();
    }
}

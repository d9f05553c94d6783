//! `hextree`: count, generate, transform and analyse the hex-tree family
//! from the command line.

mod commands;
mod table;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hextree::bijections::Bijection;
use hextree::enumerate::Family;

use crate::table::Format;

#[derive(Parser, Debug)]
#[command(name = "hextree", version, about = "Exact enumeration and analysis of hex-trees and their relatives")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count the objects of a family for each size in a range.
    Count(CountArgs),
    /// Stream every object of a family, one JSON object per line.
    Gen(GenArgs),
    /// Coefficients of a family's counting series as a JSON array.
    Series(SeriesArgs),
    /// Apply a bijection to objects read as JSON.
    Biject(BijectArgs),
    /// Register (Horton-Strahler) distribution or mean of unary-binary trees.
    Register(RegisterArgs),
    /// Mean number of leaves or mean height of marked ordered trees.
    Stats(StatsArgs),
    /// Asymptotic approximations, optionally compared with exact values.
    Asym(AsymArgs),
    /// Check hex-tree counts against the reference sequence prefix.
    Oeis(OeisArgs),
    /// Check objects read as JSON against their structural invariants.
    Validate(ValidateArgs),
}

/// An inclusive size range written `a..b`, or a single size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeRange {
    pub start: usize,
    pub end: usize,
}

impl SizeRange {
    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.start..=self.end
    }

    pub fn sizes(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromStr for SizeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let int = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a non-negative integer"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (int(a)?, int(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = int(s)?;
                (n, n)
            }
        };
        if start > end {
            return Err(format!("empty range {s}"));
        }
        Ok(SizeRange { start, end })
    }
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(value_parser = Family::from_str)]
    pub family: Family,
    #[arg(long, value_name = "INT|RANGE")]
    pub n: SizeRange,
    /// Number of unary colours (only for `ub`).
    #[arg(long)]
    pub colours: Option<u32>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_parser = Family::from_str)]
    pub family: Family,
    #[arg(long, value_name = "INT|RANGE")]
    pub n: SizeRange,
    #[arg(long)]
    pub colours: Option<u32>,
    /// Stop after this many objects in total.
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(value_parser = Family::from_str)]
    pub family: Family,
    /// Highest coefficient index to emit.
    #[arg(long, default_value_t = 20)]
    pub order: usize,
    #[arg(long)]
    pub colours: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct BijectArgs {
    #[arg(value_parser = Bijection::from_str)]
    pub bijection: Bijection,
    /// Apply the inverse direction.
    #[arg(long)]
    pub inverse: bool,
    /// Map each object and back, reporting whether it was reproduced.
    #[arg(long)]
    pub roundtrip: bool,
    /// JSON input file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    pub input: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegisterQuery {
    Dist,
    Mean,
}

#[derive(Args, Debug)]
pub struct RegisterArgs {
    #[arg(value_enum)]
    pub query: RegisterQuery,
    #[arg(long, value_name = "INT|RANGE")]
    pub n: SizeRange,
    #[arg(long, default_value_t = 1)]
    pub colours: u32,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Worker threads for independent sizes; output order is unaffected.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StatsQuery {
    Leaves,
    Height,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    #[arg(value_enum)]
    pub query: StatsQuery,
    #[arg(long, value_name = "INT|RANGE")]
    pub n: Option<SizeRange>,
    /// With `height`: count trees of height at most this value instead.
    #[arg(long)]
    pub height: Option<usize>,
    /// Series order used with `--height`.
    #[arg(long, default_value_t = 20)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AsymQuery {
    Count,
    Register,
    Leaves,
    Height,
}

#[derive(Args, Debug)]
pub struct AsymArgs {
    #[arg(value_enum)]
    pub query: AsymQuery,
    #[arg(long, value_name = "INT|RANGE")]
    pub n: SizeRange,
    #[arg(long, default_value_t = 1)]
    pub colours: u32,
    /// Fluctuation harmonics in the register approximation.
    #[arg(long, default_value_t = hextree::asymptotics::DEFAULT_HARMONICS)]
    pub terms: u32,
    /// Also print the exact value and the absolute and relative errors.
    #[arg(long)]
    pub compare_exact: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Args, Debug)]
pub struct OeisArgs {
    /// Compare instead of listing.
    #[arg(long)]
    pub check: bool,
    #[arg(long, default_value_t = 14)]
    pub terms: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// Colour count for unary-binary trees.
    #[arg(long, default_value_t = 1)]
    pub colours: u32,
    #[arg(long, default_value = "-")]
    pub input: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match commands::run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_are_inclusive() {
        assert_eq!("0..9".parse::<SizeRange>().unwrap().sizes().len(), 10);
        assert_eq!("2..=4".parse::<SizeRange>().unwrap().sizes(), vec![2, 3, 4]);
        assert_eq!("7".parse::<SizeRange>().unwrap().sizes(), vec![7]);
        assert!("5..2".parse::<SizeRange>().is_err());
        assert!("x".parse::<SizeRange>().is_err());
    }

    #[test]
    fn argument_definitions_are_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

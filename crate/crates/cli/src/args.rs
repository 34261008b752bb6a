use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "rotsym", version, about = "Rotation-symmetric Boolean function toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a truth table and write it in the text format.
    Build(BuildArgs),
    /// Report weight, nonlinearity and spectral flags.
    Analyze(AnalyzeArgs),
    /// Recompute the f3 weight and nonlinearity tables and compare with the reference values.
    Tables(TablesArgs),
    /// Compare weight and nonlinearity of f3 over a range of n.
    Conjecture(ConjectureArgs),
    /// Time the fast builders against the naive oracle and compare operation counts.
    Bench(BenchArgs),
    /// Expand a weight generating function.
    Gf(GfArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Selector {
    F2,
    F3,
    /// Open chain x1x2 + x2x3 + ... + x(n-1)xn
    T,
    /// Single monomial given by --generator
    Monomial,
    /// Rotation orbit of the monomial given by --generator
    Orbit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    F2,
    F3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

/// Accepts `7`, `3..9` or `3..=9` (both ends inclusive).
pub fn parse_range(s: &str) -> Result<NRange, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid number {t:?} in range {s:?}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(NRange { lo, hi })
}

/// One 1-based variable index, `3` or `x3`.
pub fn parse_var(s: &str) -> Result<usize, String> {
    let t = s.trim();
    t.strip_prefix('x')
        .unwrap_or(t)
        .parse()
        .map_err(|_| format!("invalid variable index {s:?}"))
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    pub selector: Selector,
    #[arg(long)]
    pub n: usize,
    /// Variable indices for `monomial` and `orbit`, e.g. 1,2,3
    #[arg(long, value_delimiter = ',', value_parser = parse_var)]
    pub generator: Option<Vec<usize>>,
    /// Write the table here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Also print the table in block letter notation (n <= 10).
    #[arg(long)]
    pub blocks: bool,
    /// Allow n above 20.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub selector: Option<Selector>,
    #[arg(long, conflicts_with = "n_range")]
    pub n: Option<usize>,
    #[arg(long, value_parser = parse_range)]
    pub n_range: Option<NRange>,
    #[arg(long, value_delimiter = ',', value_parser = parse_var)]
    pub generator: Option<Vec<usize>>,
    /// Read the table from a file (`-` for standard input).
    #[arg(long, conflicts_with_all = ["selector", "n", "n_range"])]
    pub from_file: Option<PathBuf>,
    /// Include the propagation-criterion profile.
    #[arg(long)]
    pub pc: bool,
    /// Write the Walsh spectrum as CSV (`w,value`) to this path; single table only.
    #[arg(long)]
    pub spectrum: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Allow n above 20 (up to 26).
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long, value_parser = parse_range, default_value = "3..9")]
    pub n_range: NRange,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Allow n above 20 (up to 26).
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub family: Family,
    /// Defaults to 5..16 for f2 and 7..16 for f3.
    #[arg(long, value_parser = parse_range)]
    pub n_range: Option<NRange>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    pub family: Family,
    #[arg(long, default_value_t = 12)]
    pub upto: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..9"), Ok(NRange { lo: 3, hi: 9 }));
        assert_eq!(parse_range("3..=9"), Ok(NRange { lo: 3, hi: 9 }));
        assert_eq!(parse_range("7"), Ok(NRange { lo: 7, hi: 7 }));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn generators() {
        let cli = Cli::try_parse_from(["rotsym", "build", "orbit", "--n", "5", "--generator", "1,x2, 4"]).unwrap();
        let Command::Build(b) = cli.command else { panic!() };
        assert_eq!(b.generator, Some(vec![1, 2, 4]));
        assert!(Cli::try_parse_from(["rotsym", "build", "orbit", "--n", "5", "--generator", "1,,2"]).is_err());
    }

    #[test]
    fn clap_definition_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

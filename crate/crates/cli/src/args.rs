//! Flag parsing and config-file merging. Precedence: flags (and the
//! output-directory environment variable) over the config file over defaults.

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use partgraph::verify::{VerifyLevel, DEFAULT_SEED};
use serde::Deserialize;

use crate::error::{CliError, ErrorKind};

#[derive(Debug, Parser)]
#[command(
    name = "partgraph",
    version,
    about = "Directional geometry of the integer-partition graph"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Single value or inclusive range, e.g. `10` or `8..12`.
    #[arg(long, global = true)]
    pub n: Option<NRange>,

    /// chain | axis | spine | framework | @file.json
    #[arg(long, visible_alias = "to", global = true)]
    pub refset: Option<String>,

    /// Start partition, e.g. `[3,2,1]`.
    #[arg(long, global = true)]
    pub start: Option<String>,

    #[arg(long, global = true)]
    pub radius: Option<u32>,

    #[arg(long, global = true)]
    pub format: Option<Format>,

    /// Output directory; without it results go to stdout.
    #[arg(long, global = true, env = "PARTGRAPH_OUT")]
    pub out: Option<PathBuf>,

    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[arg(long, global = true)]
    pub level: Option<Level>,

    /// Export figure annotations instead of the bare graph.
    #[arg(long, global = true)]
    pub figure: bool,

    /// TOML file supplying defaults for any of the flags above.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Build G_n and summarise size, connectivity and degrees.
    Build,
    /// Emit the four atlas tables.
    Stats,
    /// Per-vertex distances and observables.
    Field,
    /// Canonical corridor from a start vertex toward a reference set.
    Corridor,
    /// Run the property suite.
    Verify,
    /// Graph (DOT/JSON) and figure-data exports.
    Export,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

impl From<Level> for VerifyLevel {
    fn from(l: Level) -> Self {
        match l {
            Level::Quick => VerifyLevel::Quick,
            Level::Full => VerifyLevel::Full,
        }
    }
}

/// Inclusive range of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NRange(pub RangeInclusive<u32>);

impl NRange {
    pub fn values(&self) -> Vec<u32> {
        self.0.clone().collect()
    }

    pub fn single(&self) -> Result<u32, CliError> {
        if self.0.start() == self.0.end() {
            Ok(*self.0.start())
        } else {
            Err(CliError::new(
                ErrorKind::NOutOfRange,
                "this command needs a single --n value",
            ))
        }
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid n {t:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(NRange(lo..=hi))
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    n: Option<toml::Value>,
    refset: Option<String>,
    start: Option<String>,
    radius: Option<u32>,
    format: Option<Format>,
    out: Option<PathBuf>,
    seed: Option<u64>,
    level: Option<Level>,
}

/// Fully resolved options for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub n: Option<NRange>,
    pub refset: Option<String>,
    pub start: Option<String>,
    pub radius: Option<u32>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub level: VerifyLevel,
    pub figure: bool,
}

impl RunConfig {
    pub fn resolve(cli: Cli) -> Result<Self, CliError> {
        let file = match &cli.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                toml::from_str::<ConfigFile>(&text)
                    .map_err(|e| CliError::new(ErrorKind::Config, e.to_string()))?
            }
            None => ConfigFile::default(),
        };
        let file_n = match file.n {
            None => None,
            Some(toml::Value::Integer(i)) => Some(NRange(i as u32..=i as u32)),
            Some(toml::Value::String(s)) => Some(
                s.parse()
                    .map_err(|e: String| CliError::new(ErrorKind::Config, e))?,
            ),
            Some(other) => {
                return Err(CliError::new(
                    ErrorKind::Config,
                    format!("bad n in config: {other}"),
                ))
            }
        };
        Ok(RunConfig {
            command: cli.command,
            n: cli.n.or(file_n),
            refset: cli.refset.or(file.refset),
            start: cli.start.or(file.start),
            radius: cli.radius.or(file.radius),
            format: cli.format.or(file.format),
            out: cli.out.or(file.out),
            seed: cli.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
            level: cli.level.or(file.level).unwrap_or(Level::Quick).into(),
            figure: cli.figure,
        })
    }

    pub fn require_n(&self) -> Result<&NRange, CliError> {
        self.n
            .as_ref()
            .ok_or_else(|| CliError::new(ErrorKind::Usage, "--n is required for this command"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_ranges() {
        assert_eq!("8".parse::<NRange>().unwrap(), NRange(8..=8));
        assert_eq!("8..12".parse::<NRange>().unwrap(), NRange(8..=12));
        assert_eq!("1..=3".parse::<NRange>().unwrap().values(), vec![1, 2, 3]);
        assert!("12..8".parse::<NRange>().is_err());
        assert!("x".parse::<NRange>().is_err());
        assert!(NRange(8..=12).single().is_err());
    }

    #[test]
    fn flags_override_config() {
        let dir = std::env::temp_dir().join(format!("partgraph-cfg-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cfg.toml");
        std::fs::write(
            &path,
            "n = \"8..10\"\nseed = 7\nlevel = \"full\"\nrefset = \"spine\"\n",
        )
        .unwrap();
        let cli = Cli::parse_from([
            "partgraph",
            "stats",
            "--config",
            path.to_str().unwrap(),
            "--refset",
            "axis",
        ]);
        let cfg = RunConfig::resolve(cli).unwrap();
        assert_eq!(cfg.n, Some(NRange(8..=10)));
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.level, VerifyLevel::Full);
        assert_eq!(cfg.refset.as_deref(), Some("axis"));
    }
}

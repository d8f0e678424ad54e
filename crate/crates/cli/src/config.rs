//! Optional `key=value` defaults. Flags given on the command line win.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;

use crate::cli::{Format, GlobalArgs};

pub const DEFAULT_RANK: usize = 3;
/// Default bound for exhaustive sweeps.
pub const DEFAULT_MAX_RANK: usize = 4;
/// Bound for single-instance spot checks.
pub const SPOT_MAX_RANK: usize = 5;

const KEYS: &[&str] = &["rank", "format", "out", "jobs", "seed", "max-rank", "timing"];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config(BTreeMap<String, String>);

impl Config {
    /// Blank lines and `#` comments are skipped; `_` in keys reads as `-`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("line {}: expected key=value", i + 1))?;
            let k = k.trim().replace('_', "-");
            if !KEYS.contains(&k.as_str()) {
                bail!("line {}: unknown key `{k}`", i + 1);
            }
            map.insert(k, v.trim().to_string());
        }
        Ok(Config(map))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Config::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        self.0
            .get(key)
            .map(|v| v.parse::<T>().map_err(|e| anyhow!("config `{key}`: {e}")))
            .transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub rank: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: usize,
    pub seed: u64,
    pub max_rank: usize,
    pub timing: bool,
}

impl Settings {
    pub fn resolve(g: &GlobalArgs) -> Result<Self> {
        let cfg = match &g.config {
            Some(p) => Config::load(p)?,
            None => Config::default(),
        };
        let format = match g.format {
            Some(f) => f,
            None => match cfg.0.get("format") {
                Some(s) => Format::from_str(s, true).map_err(|e| anyhow!("config `format`: {e}"))?,
                None => Format::Text,
            },
        };
        let jobs = match g.jobs.or(cfg.get("jobs")?) {
            Some(0) => bail!("--jobs must be positive"),
            Some(j) => j,
            None => std::thread::available_parallelism().map_or(1, |j| j.get()),
        };
        Ok(Settings {
            rank: g.rank.or(cfg.get("rank")?).unwrap_or(DEFAULT_RANK),
            format,
            out: g.out.clone().or(cfg.get("out")?),
            jobs,
            seed: g.seed.or(cfg.get("seed")?).unwrap_or(0),
            max_rank: g.max_rank.or(cfg.get("max-rank")?).unwrap_or(DEFAULT_MAX_RANK),
            timing: !g.no_timing && cfg.get("timing")?.unwrap_or(true),
        })
    }

    /// Writes a finished report to `--out` or stdout.
    pub fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_overrides() {
        let cfg = Config::parse("# sweep\nrank = 2\nmax_rank=5\nformat=json\n\njobs=3").unwrap();
        assert_eq!(cfg.get::<usize>("rank").unwrap(), Some(2));
        assert_eq!(cfg.get::<usize>("max-rank").unwrap(), Some(5));
        assert!(cfg.get::<usize>("format").is_err());
        assert!(Config::parse("rank").is_err());
        assert!(Config::parse("colour=red").is_err());
    }

    #[test]
    fn flags_beat_the_file() {
        let dir = std::env::temp_dir().join(format!("qalcove-cfg-{}", std::process::id()));
        fs::write(&dir, "rank=2\nseed=9\nformat=latex\ntiming=false\n").unwrap();
        let g = GlobalArgs {
            rank: Some(3),
            config: Some(dir.clone()),
            jobs: Some(2),
            ..Default::default()
        };
        let s = Settings::resolve(&g).unwrap();
        fs::remove_file(&dir).unwrap();
        assert_eq!((s.rank, s.seed, s.format, s.jobs, s.timing), (3, 9, Format::Latex, 2, false));
    }
}

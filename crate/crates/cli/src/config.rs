//! Run settings: defaults, then a `key = value` file, then flags.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use reciprocity::verify::DEFAULT_BRUTEFORCE_CAP;

pub const DEFAULT_SWEEP_MAX: u64 = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            _ => Err(format!("unknown format {s:?}, expected text, json or csv")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threads {
    Auto,
    Fixed(usize),
}

impl FromStr for Threads {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Self::Auto);
        }
        match s.parse::<usize>() {
            Ok(0) | Err(_) => Err(format!(
                "threads must be a positive integer or auto, got {s:?}"
            )),
            Ok(n) => Ok(Self::Fixed(n)),
        }
    }
}

impl fmt::Display for Threads {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Auto => f.write_str("auto"),
            Self::Fixed(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub sweep_max: u64,
    pub bruteforce_cap: u64,
    pub threads: Threads,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            sweep_max: DEFAULT_SWEEP_MAX,
            bruteforce_cap: DEFAULT_BRUTEFORCE_CAP,
            threads: Threads::Auto,
            format: Format::Text,
            output: None,
        }
    }
}

/// Flags that override the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub sweep_max: Option<u64>,
    pub bruteforce_cap: Option<u64>,
    pub threads: Option<Threads>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn load(file: Option<&Path>, flags: &Overrides) -> Result<Self, String> {
        let mut cfg = Self::default();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            cfg.apply_file(&text)
                .map_err(|e| format!("{}: {e}", path.display()))?;
        }
        if let Some(v) = flags.sweep_max {
            cfg.sweep_max = v;
        }
        if let Some(v) = flags.bruteforce_cap {
            cfg.bruteforce_cap = v;
        }
        if let Some(v) = flags.threads {
            cfg.threads = v;
        }
        if let Some(v) = flags.format {
            cfg.format = v;
        }
        if let Some(v) = &flags.output {
            cfg.output = Some(v.clone());
        }
        if cfg.sweep_max < 2 {
            return Err(format!(
                "sweep_max must be at least 2, got {}",
                cfg.sweep_max
            ));
        }
        Ok(cfg)
    }

    fn apply_file(&mut self, text: &str) -> Result<(), String> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", i + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |e: String| format!("line {}: {e}", i + 1);
            match key {
                "sweep_max" => {
                    self.sweep_max = value.parse().map_err(|e| bad(format!("sweep_max: {e}")))?
                }
                "bruteforce_cap" => {
                    self.bruteforce_cap = value
                        .parse()
                        .map_err(|e| bad(format!("bruteforce_cap: {e}")))?
                }
                "threads" => self.threads = value.parse().map_err(bad)?,
                "format" | "output_format" => self.format = value.parse().map_err(bad)?,
                "output" | "output_path" => self.output = Some(PathBuf::from(value)),
                _ => return Err(bad(format!("unknown key {key:?}"))),
            }
        }
        Ok(())
    }
}

//! key=value config files and flag/file/default resolution.
//!
//! Every settable key can appear in the config file or as the command-line
//! flag of the same name; the flag wins, then the file, then the default.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::CliError;

/// All keys any subcommand understands. Config files shared across
/// subcommands may set any of these; anything else is a config error.
const KNOWN_KEYS: &[&str] = &[
    "lexicon",
    "tagmap",
    "model",
    "corpus",
    "input",
    "output",
    "t0",
    "t1",
    "context-k",
    "hidden-j",
    "learning-rate",
    "max-epochs",
    "patience",
    "seed",
    "init-range",
    "train-size",
    "cross-size",
    "split-seed",
    "unknown-lowercase",
    "padding",
    "case",
    "annotate",
    "marker",
    "summary",
    "summary-dir",
    "snippet-window",
    "show-errors",
    "k-values",
    "j-values",
    "vary",
];

/// Parsed config file plus resolution helpers.
#[derive(Debug, Default)]
pub struct Settings {
    values: BTreeMap<String, String>,
}

impl Settings {
    pub fn load(path: Option<&Path>) -> Result<Settings, CliError> {
        let Some(path) = path else {
            return Ok(Settings::default());
        };
        let source = std::fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("cannot read config file {}: {e}", path.display()))
        })?;
        let mut values = BTreeMap::new();
        for (idx, line) in source.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!(
                    "config {} line {}: expected key=value, got {line:?}",
                    path.display(),
                    idx + 1
                ))
            })?;
            let key = key.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(CliError::Usage(format!(
                    "config {} line {}: unknown key {key:?}",
                    path.display(),
                    idx + 1
                )));
            }
            values.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Settings { values })
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// flag > config file > default.
    pub fn resolve<T>(&self, key: &str, flag: Option<T>, default: T) -> Result<T, CliError>
    where
        T: FromStr,
        T::Err: Display,
    {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.raw(key) {
            Some(s) => s
                .parse()
                .map_err(|e| CliError::Usage(format!("config key {key}={s:?}: {e}"))),
            None => Ok(default),
        }
    }

    /// flag > config file > absent.
    pub fn resolve_opt<T>(&self, key: &str, flag: Option<T>) -> Result<Option<T>, CliError>
    where
        T: FromStr,
        T::Err: Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw(key) {
            Some(s) => s
                .parse()
                .map(Some)
                .map_err(|e| CliError::Usage(format!("config key {key}={s:?}: {e}"))),
            None => Ok(None),
        }
    }

    /// A required input path; checked for existence up front.
    pub fn resolve_input_path(
        &self,
        key: &str,
        flag: Option<PathBuf>,
    ) -> Result<PathBuf, CliError> {
        let path = self
            .resolve_opt(key, flag)?
            .ok_or_else(|| CliError::Usage(format!("missing required path: --{key}")))?;
        if !path.exists() {
            return Err(CliError::Usage(format!(
                "--{key}: path {} does not exist",
                path.display()
            )));
        }
        Ok(path)
    }

    /// A required output path; its parent directory must exist.
    pub fn resolve_output_path(
        &self,
        key: &str,
        flag: Option<PathBuf>,
    ) -> Result<PathBuf, CliError> {
        let path = self
            .resolve_opt(key, flag)?
            .ok_or_else(|| CliError::Usage(format!("missing required path: --{key}")))?;
        let parent = if path.parent().map(|p| p.as_os_str().is_empty()).unwrap_or(true) {
            PathBuf::from(".")
        } else {
            path.parent().unwrap().to_path_buf()
        };
        if !parent.exists() {
            return Err(CliError::Usage(format!(
                "--{key}: directory {} does not exist",
                parent.display()
            )));
        }
        Ok(path)
    }
}

/// Comma-separated usize list ("4,6,8").
pub fn parse_usize_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad integer {p:?} in list {s:?}")))
        })
        .collect()
}

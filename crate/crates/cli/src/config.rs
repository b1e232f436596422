//! Defaults, overridden by the JSON file named in STAIRCASE_TABLEAUX_CONFIG,
//! overridden by flags.

use std::path::Path;

use serde::Deserialize;
use staircase_core::tableaux::Bounds;

pub const CONFIG_ENV: &str = "STAIRCASE_TABLEAUX_CONFIG";

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub threads: usize,
    pub max_n: usize,
    pub bounds: Bounds,
    pub levels: Vec<f64>,
}

impl Default for Config {
    fn default() -> Self {
        Config { threads: 1, max_n: 5, bounds: Bounds::default(), levels: crate::plot::DEFAULT_LEVELS.to_vec() }
    }
}

impl Config {
    pub fn from_file(path: &Path) -> anyhow::Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| anyhow::anyhow!("reading {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| anyhow::anyhow!("config {}: {e}", path.display()))
    }

    pub fn load() -> anyhow::Result<Config> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Config::from_file(Path::new(&p)),
            _ => Ok(Config::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_files_keep_defaults() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("c.json");
        std::fs::write(&p, r#"{"threads": 3, "bounds": {"max_cells": 9}}"#).unwrap();
        let c = Config::from_file(&p).unwrap();
        assert_eq!(c.threads, 3);
        assert_eq!(c.max_n, 5);
        assert_eq!(c.bounds.max_cells, 9);
        assert_eq!(c.bounds.max_set_valued_size, Bounds::default().max_set_valued_size);
        std::fs::write(&p, r#"{"thread": 3}"#).unwrap();
        assert!(Config::from_file(&p).is_err());
    }
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mg::{MatchingMode, SmcMode};

const RESERVED: [&str; 9] = ["{", "}", "[", "]", "<", ">", "sel", "lsr", "lse"];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default, deny_unknown_fields)]
pub struct Config {
    pub feature_alphabet: Vec<String>,
    pub leaf_alphabet: Vec<String>,
    pub matching_mode: MatchingMode,
    pub smc_mode: SmcMode,
    /// Overrides each law's default range. Leaf counts throughout; laws
    /// graded by internal vertices use `max_leaves - 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_leaves: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            feature_alphabet: vec!["A".into(), "B".into()],
            leaf_alphabet: vec!["a".into(), "b".into()],
            matching_mode: MatchingMode::First,
            smc_mode: SmcMode::Unique,
            max_leaves: None,
        }
    }
}

fn split_list(v: &str) -> Vec<String> {
    v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

impl Config {
    /// JSON object, or `key=value` lines with `#` comments.
    pub fn parse(text: &str) -> Result<Config> {
        let cfg = if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?
        } else {
            let mut cfg = Config::default();
            for (n, line) in text.lines().enumerate() {
                let line = line.split('#').next().unwrap().trim();
                if line.is_empty() {
                    continue;
                }
                let (k, v) = line
                    .split_once('=')
                    .ok_or_else(|| Error::Config(format!("line {}: expected key=value", n + 1)))?;
                cfg.set(k.trim(), v.trim())?;
            }
            cfg
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "featureAlphabet" => self.feature_alphabet = split_list(value),
            "leafAlphabet" => self.leaf_alphabet = split_list(value),
            "matchingMode" => self.matching_mode = MatchingMode::parse(value)?,
            "smcMode" => self.smc_mode = SmcMode::parse(value)?,
            "maxLeaves" => {
                let n = value
                    .parse()
                    .map_err(|_| Error::Config(format!("maxLeaves must be a number, got `{value}`")))?;
                self.max_leaves = Some(n);
            }
            _ => return Err(Error::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        for (name, alpha) in [("featureAlphabet", &self.feature_alphabet), ("leafAlphabet", &self.leaf_alphabet)] {
            if alpha.is_empty() {
                return Err(Error::Config(format!("{name} is empty")));
            }
            for s in alpha {
                let bad_char = s
                    .chars()
                    .any(|c| c.is_whitespace() || "{}[]<>|:\"(),=".contains(c));
                if RESERVED.contains(&s.as_str()) || bad_char {
                    return Err(Error::Config(format!("{name}: `{s}` is reserved")));
                }
            }
        }
        if self.max_leaves == Some(0) {
            return Err(Error::Config("maxLeaves must be positive".into()));
        }
        Ok(())
    }

    pub fn features(&self) -> Vec<&str> {
        self.feature_alphabet.iter().map(String::as_str).collect()
    }

    pub fn leaves(&self) -> Vec<&str> {
        self.leaf_alphabet.iter().map(String::as_str).collect()
    }

    pub fn max_or(&self, default: usize) -> usize {
        self.max_leaves.unwrap_or(default)
    }
}

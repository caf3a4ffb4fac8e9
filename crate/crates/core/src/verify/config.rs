use std::collections::BTreeMap;
use std::path::Path;

use crate::{Error, Result};

/// Keys accepted in a config file; each mirrors the command-line flag of
/// the same name.
pub const CONFIG_KEYS: [&str; 13] = [
    "p",
    "f",
    "e",
    "pi",
    "trunc",
    "prec",
    "json",
    "suite",
    "deg",
    "mmax",
    "nmax",
    "frobenius",
    "assert",
];

/// `key = value` lines; blank lines and `#` comments are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", path.display())))?;
        parse_config(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// Typed lookup; a malformed value is an error.
    pub fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::InvalidParameters(format!("config key {key}: cannot read {v:?}")))
            })
            .transpose()
    }

    pub fn flag(&self, key: &str) -> Result<bool> {
        match self.get(key) {
            None | Some("false") | Some("0") => Ok(false),
            Some("true") | Some("1") => Ok(true),
            Some(v) => Err(Error::InvalidParameters(format!(
                "config key {key}: expected true or false, got {v:?}"
            ))),
        }
    }
}

pub fn parse_config(text: &str) -> Result<ConfigFile> {
    let mut values = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameters(format!("config line {}: expected key = value", lineno + 1)))?;
        let k = k.trim().trim_start_matches("--");
        if !CONFIG_KEYS.contains(&k) {
            return Err(Error::InvalidParameters(format!(
                "config line {}: unknown key {k:?}",
                lineno + 1
            )));
        }
        values.insert(k.to_string(), v.trim().to_string());
    }
    Ok(ConfigFile { values })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_pairs() {
        let c = parse_config("# group\np = 3\nf=2\n\njson = true  # trailing\n").unwrap();
        assert_eq!(c.parse::<u64>("p").unwrap(), Some(3));
        assert_eq!(c.parse::<usize>("f").unwrap(), Some(2));
        assert_eq!(c.parse::<usize>("e").unwrap(), None);
        assert!(c.flag("json").unwrap());
    }

    #[test]
    fn rejects_junk() {
        assert!(parse_config("p 3").is_err());
        assert!(parse_config("colour = red").is_err());
        assert!(parse_config("p = three").unwrap().parse::<u64>("p").is_err());
    }
}

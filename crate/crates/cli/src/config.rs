//! Optional `zfr.toml` defaults. Command-line flags take precedence.

use serde::Deserialize;
use std::path::{Path, PathBuf};

/// A number written either bare or quoted, so that `T0 = "e54550"` and
/// `A = 76.2` both work.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Text {
    Str(String),
    Int(i64),
    Float(f64),
}

impl Text {
    pub fn into_string(self) -> String {
        match self {
            Text::Str(s) => s,
            Text::Int(i) => i.to_string(),
            // Debug keeps a decimal point and round-trips the double.
            Text::Float(f) => format!("{f:?}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub digits: Option<u32>,
    #[serde(rename = "A")]
    pub a: Option<Text>,
    #[serde(rename = "B")]
    pub b: Option<Text>,
    #[serde(rename = "T0")]
    pub t0: Option<Text>,
    pub zeros_file: Option<PathBuf>,
}

pub const DEFAULT_FILE: &str = "zfr.toml";

pub enum LoadError {
    Io(String),
    Invalid(String),
}

impl Config {
    pub fn parse(text: &str, origin: &Path) -> Result<Config, LoadError> {
        toml::from_str(text).map_err(|e| LoadError::Invalid(format!("{}: {e}", origin.display())))
    }

    /// Reads `explicit` when given, otherwise `zfr.toml` in the working
    /// directory if there is one.
    pub fn load(explicit: Option<&Path>) -> Result<Config, LoadError> {
        let path = match explicit {
            Some(p) => p.to_path_buf(),
            None => {
                let p = PathBuf::from(DEFAULT_FILE);
                if !p.exists() {
                    return Ok(Config::default());
                }
                p
            }
        };
        let text = std::fs::read_to_string(&path).map_err(|e| LoadError::Io(format!("{}: {e}", path.display())))?;
        Config::parse(&text, &path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_value_forms() {
        let c = Config::parse("digits = 40\nA = 76.2\nB = \"4.45\"\nT0 = \"e54550\"\n", Path::new("x")).ok().unwrap();
        assert_eq!(c.digits, Some(40));
        assert_eq!(c.a.unwrap().into_string(), "76.2");
        assert_eq!(c.b.unwrap().into_string(), "4.45");
        assert_eq!(c.t0.unwrap().into_string(), "e54550");
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(matches!(Config::parse("a = 1\n", Path::new("x")), Err(LoadError::Invalid(_))));
    }
}

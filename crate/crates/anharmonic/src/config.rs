//! `key = value` parameter files. Keys are flag names without the leading
//! dashes (`-` and `_` are interchangeable); `#` starts a comment. Flags
//! given on the command line override the file.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::CliError;

pub const KNOWN_KEYS: &[&str] = &[
    "hbar", "mu", "omega", "v0", "alpha", "beta", "gamma", "format",
    "emax", "mmax",
    "n", "ntheta", "m", "r_max", "r_points", "theta_points", "phi_points",
    "ra", "rb", "tau", "ncut", "tolerance", "slices", "lattice_points", "lattice_rmax", "lattice_tolerance",
    "theta_a", "theta_b", "phi_a", "phi_b", "ntheta_cut", "m_cut",
    "suite", "tolerance_scale",
];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Invalid(format!("config line {}: expected key=value", lineno + 1)))?;
            let key = key.trim().trim_start_matches('-').replace('-', "_");
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(CliError::Invalid(format!("config line {}: unknown key `{key}`", lineno + 1)));
            }
            values.insert(key, value.trim().to_owned());
        }
        Ok(ConfigFile { values })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// Flag value if given, else the file value, else `default`.
    pub fn pick<T: FromStr>(&self, key: &str, flag: Option<T>, default: T) -> Result<T, CliError> {
        Ok(self.pick_opt(key, flag)?.unwrap_or(default))
    }

    pub fn pick_opt<T: FromStr>(&self, key: &str, flag: Option<T>) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw(key) {
            None => Ok(None),
            Some(s) => s
                .parse()
                .map(Some)
                .map_err(|_| CliError::Invalid(format!("config key `{key}`: cannot parse `{s}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_overrides() {
        let cfg = ConfigFile::parse("# couplings\nalpha = 1\n--beta=0.5 # trailing\nr-max = 4\n\n").unwrap();
        assert_eq!(cfg.pick("alpha", None, 0.0).unwrap(), 1.0);
        assert_eq!(cfg.pick("alpha", Some(2.0), 0.0).unwrap(), 2.0);
        assert_eq!(cfg.pick("beta", None, 0.0).unwrap(), 0.5);
        assert_eq!(cfg.pick("r_max", None, 0.0).unwrap(), 4.0);
        assert_eq!(cfg.pick("gamma", None, 0.25).unwrap(), 0.25);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(ConfigFile::parse("alpha 1").is_err());
        assert!(ConfigFile::parse("colour = red").is_err());
        let cfg = ConfigFile::parse("alpha = one").unwrap();
        assert!(cfg.pick("alpha", None, 0.0).is_err());
    }
}

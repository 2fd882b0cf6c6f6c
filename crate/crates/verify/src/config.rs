//! Run configuration: a line-based `key = value` file whose keys mirror the
//! command-line flags, with command-line values taking precedence.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use daha_core::params::{make_params, Mode, Params, DEFAULT_GENERICITY_BOUND, DEFAULT_TRIALS};
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("config line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unknown config key `{0}`")]
    UnknownKey(String),
    #[error("invalid value `{value}` for `{key}`: {reason}")]
    InvalidValue { key: String, value: String, reason: String },
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error(transparent)]
    Params(#[from] daha_core::Error),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Exact arithmetic at the configured parameters; only the heaviest
    /// polynomial checks fall back to seeded random points when symbolic.
    Exact,
    /// Every check runs exactly at `trials` seeded random points.
    Prob,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

/// Unvalidated settings from one source; `None` means "not given".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Settings {
    pub checks: Option<String>,
    pub mode: Option<String>,
    pub seed: Option<String>,
    pub trials: Option<String>,
    pub max_mn: Option<String>,
    pub max_degree: Option<String>,
    pub max_n: Option<String>,
    pub params: Option<String>,
    pub symbolic: Option<bool>,
    pub out: Option<String>,
    pub format: Option<String>,
}

impl Settings {
    pub fn parse(text: &str) -> Result<Settings, ConfigError> {
        let mut s = Settings::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(ConfigError::Syntax { line: i + 1, message: "expected `key = value`".into() });
            };
            let (key, value) = (key.trim(), value.trim().to_string());
            let slot = match key {
                "checks" => &mut s.checks,
                "mode" => &mut s.mode,
                "seed" => &mut s.seed,
                "trials" => &mut s.trials,
                "max-mn" => &mut s.max_mn,
                "max-degree" => &mut s.max_degree,
                "max-n" => &mut s.max_n,
                "params" => &mut s.params,
                "out" => &mut s.out,
                "format" => &mut s.format,
                "symbolic" => {
                    s.symbolic = Some(parse_bool(key, &value)?);
                    continue;
                }
                _ => return Err(ConfigError::UnknownKey(key.to_string())),
            };
            *slot = Some(value);
        }
        Ok(s)
    }

    pub fn from_file(path: &str) -> Result<Settings, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Io { path: path.to_string(), message: e.to_string() })?;
        Settings::parse(&text)
    }

    /// `self` with every unset field taken from `base`.
    pub fn over(self, base: Settings) -> Settings {
        // An explicit choice of parameters on one side replaces the other's.
        let explicit = self.params.is_some() || self.symbolic.is_some();
        Settings {
            checks: self.checks.or(base.checks),
            mode: self.mode.or(base.mode),
            seed: self.seed.or(base.seed),
            trials: self.trials.or(base.trials),
            max_mn: self.max_mn.or(base.max_mn),
            max_degree: self.max_degree.or(base.max_degree),
            max_n: self.max_n.or(base.max_n),
            params: if explicit { self.params } else { base.params },
            symbolic: if explicit { self.symbolic } else { base.symbolic },
            out: self.out.or(base.out),
            format: self.format.or(base.format),
        }
    }
}

fn parse_bool(key: &str, value: &str) -> Result<bool, ConfigError> {
    match value {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(invalid(key, value, "expected true or false")),
    }
}

fn invalid(key: &str, value: &str, reason: &str) -> ConfigError {
    ConfigError::InvalidValue { key: key.into(), value: value.into(), reason: reason.into() }
}

fn bounded<T: FromStr + PartialOrd + std::fmt::Display>(
    key: &str,
    value: Option<&String>,
    default: T,
    lo: T,
    hi: T,
) -> Result<T, ConfigError> {
    let Some(v) = value else { return Ok(default) };
    let x: T = v.parse().map_err(|_| invalid(key, v, "not an integer"))?;
    if x < lo || x > hi {
        return Err(invalid(key, v, &format!("must lie in [{lo}, {hi}]")));
    }
    Ok(x)
}

/// An exact rational written as `n`, `-n` or `n/d`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// `q=3/2,a=2,b=1/3,c=5,d=7`.
pub fn parse_assignments(s: &str) -> Result<BTreeMap<String, BigRational>, ConfigError> {
    let mut map = BTreeMap::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| invalid("params", part, "expected name=value"))?;
        let k = k.trim();
        if !["q", "a", "b", "c", "d"].contains(&k) {
            return Err(invalid("params", part, "parameter names are q, a, b, c, d"));
        }
        let r = parse_rational(v).ok_or_else(|| invalid("params", part, "expected a rational n or n/d"))?;
        if map.insert(k.to_string(), r).is_some() {
            return Err(invalid("params", part, "parameter given twice"));
        }
    }
    Ok(map)
}

/// Builds validated parameters from an optional assignment string.
pub fn params_from(assignments: Option<&str>) -> Result<Params, ConfigError> {
    match assignments {
        None => Ok(Params::symbolic()),
        Some(s) => Ok(make_params(Mode::Specialized, Some(&parse_assignments(s)?), DEFAULT_GENERICITY_BOUND)?),
    }
}

pub const MAX_MN_LIMIT: i32 = 5;
pub const MAX_DEGREE_LIMIT: u32 = 10;
pub const MAX_N_LIMIT: u32 = 12;
pub const TRIALS_LIMIT: usize = 64;

#[derive(Clone, Debug)]
pub struct Config {
    pub checks: Selection,
    pub mode: CheckMode,
    pub seed: u64,
    pub trials: usize,
    /// Upper bound for `m, n` in the leading-term identities.
    pub max_mn: i32,
    /// Spanning-set degree for the operator identities in the polynomial
    /// representation.
    pub max_degree: u32,
    /// Largest `n` for the eigenvalue checks.
    pub max_n: u32,
    pub params: Params,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            checks: Selection::All,
            mode: CheckMode::Exact,
            seed: 0,
            trials: DEFAULT_TRIALS,
            max_mn: 3,
            max_degree: 6,
            max_n: 8,
            params: Params::symbolic(),
            out: None,
            format: Format::Json,
        }
    }
}

impl Config {
    pub fn from_settings(s: &Settings) -> Result<Config, ConfigError> {
        let d = Config::default();
        let checks = match s.checks.as_deref().map(str::trim) {
            None | Some("all") => Selection::All,
            Some(list) => Selection::Ids(
                list.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect(),
            ),
        };
        let mode = match s.mode.as_deref() {
            None | Some("exact") => CheckMode::Exact,
            Some("prob") | Some("probabilistic") => CheckMode::Prob,
            Some(v) => return Err(invalid("mode", v, "expected exact or prob")),
        };
        let format = match s.format.as_deref() {
            None | Some("json") => Format::Json,
            Some("text") => Format::Text,
            Some(v) => return Err(invalid("format", v, "expected json or text")),
        };
        if s.symbolic == Some(true) && s.params.is_some() {
            return Err(invalid("params", s.params.as_deref().unwrap_or(""), "conflicts with symbolic"));
        }
        let params = if s.symbolic == Some(true) { Params::symbolic() } else { params_from(s.params.as_deref())? };
        Ok(Config {
            checks,
            mode,
            seed: bounded("seed", s.seed.as_ref(), d.seed, 0, u64::MAX)?,
            trials: bounded("trials", s.trials.as_ref(), d.trials, 1, TRIALS_LIMIT)?,
            max_mn: bounded("max-mn", s.max_mn.as_ref(), d.max_mn, 1, MAX_MN_LIMIT)?,
            max_degree: bounded("max-degree", s.max_degree.as_ref(), d.max_degree, 0, MAX_DEGREE_LIMIT)?,
            max_n: bounded("max-n", s.max_n.as_ref(), d.max_n, 0, MAX_N_LIMIT)?,
            params,
            out: s.out.as_ref().map(PathBuf::from),
            format,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_cli() {
        let file = Settings::parse("# defaults\nseed = 7\nmax-mn = 2\nparams = q=3/2,a=2,b=1/3,c=5,d=7\n\nformat=text").unwrap();
        let cli = Settings { seed: Some("9".into()), symbolic: Some(true), ..Default::default() };
        let c = Config::from_settings(&cli.over(file.clone())).unwrap();
        assert_eq!((c.seed, c.max_mn, c.format), (9, 2, Format::Text));
        assert_eq!(c.params.echo(), "symbolic");
        let c = Config::from_settings(&Settings::default().over(file)).unwrap();
        assert_eq!(c.params.echo(), "q=3/2,a=2,b=1/3,c=5,d=7");
    }

    #[test]
    fn defaults() {
        let c = Config::from_settings(&Settings::default()).unwrap();
        assert_eq!((c.max_mn, c.max_degree, c.max_n, c.trials), (3, 6, 8, 8));
        assert_eq!(c.checks, Selection::All);
        assert_eq!(c.mode, CheckMode::Exact);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Settings::parse("seed 3"), Err(ConfigError::Syntax { line: 1, .. })));
        assert!(matches!(Settings::parse("colour = red"), Err(ConfigError::UnknownKey(_))));
        let s = Settings { max_mn: Some("9".into()), ..Default::default() };
        assert!(matches!(Config::from_settings(&s), Err(ConfigError::InvalidValue { .. })));
        let s = Settings { params: Some("q=1,a=2,b=3,c=5,d=7".into()), ..Default::default() };
        match Config::from_settings(&s) {
            Err(ConfigError::Params(daha_core::Error::DegenerateParameters { m, .. })) => assert_eq!(m, 1),
            other => panic!("{other:?}"),
        }
        let s = Settings { params: Some("q=2,a=2".into()), ..Default::default() };
        assert!(matches!(Config::from_settings(&s), Err(ConfigError::Params(daha_core::Error::MissingAssignment(_)))));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-4/6"), Some(BigRational::new((-2).into(), 3.into())));
        assert_eq!(parse_rational("5"), Some(BigRational::from_integer(5.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}

//! Run configuration: per-suite size caps, output format, threads and seed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Output format of the command-line front end.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "dot" => Ok(Format::Dot),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
        })
    }
}

/// Largest size `n` each suite enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Interval counts by enumeration.
    pub counts: usize,
    /// Maximal elements, Hasse structure and `kappa`.
    pub structure: usize,
    /// Tamari and comb comparisons.
    pub orders: usize,
    /// Degree in `t` of the functional equations.
    pub series: usize,
    /// Degree in `t` of the algebraic equation.
    pub algebraic: usize,
    pub monoids: usize,
    /// Factorization and isomorphism checks.
    pub factorization: usize,
    /// Core intervals and chains.
    pub core: usize,
    /// Meet against the brute-force greatest lower bound.
    pub meet: usize,
    /// Rise and Desc against their oracles.
    pub meet_lemmas: usize,
    pub hochschild: usize,
    pub boolean: usize,
    /// Coxeter roots of `F_n`.
    pub coxeter: usize,
    pub zeta: usize,
    /// Degree in `t` for the h-polynomial equations.
    pub hpoly: usize,
    pub narayana: usize,
}

/// Named presets for [`Caps`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CapsPreset {
    #[default]
    Small,
    Medium,
    Large,
}

impl FromStr for CapsPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<CapsPreset> {
        match s {
            "small" => Ok(CapsPreset::Small),
            "medium" => Ok(CapsPreset::Medium),
            "large" => Ok(CapsPreset::Large),
            other => Err(Error::InvalidArgument(format!("unknown caps preset {other:?}"))),
        }
    }
}

impl Caps {
    pub fn preset(p: CapsPreset) -> Caps {
        match p {
            CapsPreset::Small => Caps {
                counts: 6,
                structure: 7,
                orders: 6,
                series: 6,
                algebraic: 12,
                monoids: 6,
                factorization: 5,
                core: 7,
                meet: 6,
                meet_lemmas: 5,
                hochschild: 6,
                boolean: 6,
                coxeter: 5,
                zeta: 6,
                hpoly: 6,
                narayana: 7,
            },
            // The sizes at which every identity is checked by the acceptance tests.
            CapsPreset::Medium => Caps {
                counts: 7,
                structure: 8,
                orders: 7,
                series: 6,
                algebraic: 12,
                monoids: 7,
                factorization: 6,
                core: 8,
                meet: 7,
                meet_lemmas: 6,
                hochschild: 8,
                boolean: 7,
                coxeter: 6,
                zeta: 6,
                hpoly: 8,
                narayana: 9,
            },
            CapsPreset::Large => Caps {
                counts: 8,
                structure: 9,
                orders: 8,
                series: 7,
                algebraic: 30,
                monoids: 8,
                factorization: 7,
                core: 9,
                meet: 8,
                meet_lemmas: 7,
                hochschild: 10,
                boolean: 9,
                coxeter: 7,
                zeta: 7,
                hpoly: 10,
                narayana: 10,
            },
        }
    }

    /// Rejects zero caps.
    pub fn validate(&self) -> Result<()> {
        let all = [
            ("counts", self.counts),
            ("structure", self.structure),
            ("orders", self.orders),
            ("series", self.series),
            ("algebraic", self.algebraic),
            ("monoids", self.monoids),
            ("factorization", self.factorization),
            ("core", self.core),
            ("meet", self.meet),
            ("meet_lemmas", self.meet_lemmas),
            ("hochschild", self.hochschild),
            ("boolean", self.boolean),
            ("coxeter", self.coxeter),
            ("zeta", self.zeta),
            ("hpoly", self.hpoly),
            ("narayana", self.narayana),
        ];
        match all.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(Error::InvalidArgument(format!("cap {name} must be positive"))),
            None => Ok(()),
        }
    }
}

impl Default for Caps {
    fn default() -> Caps {
        Caps::preset(CapsPreset::Small)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub caps: Caps,
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
    pub format: Format,
    /// Seed for sampled checks.
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig { caps: Caps::default(), threads: 0, format: Format::Text, seed: 0x5eed }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        self.caps.validate()
    }

    /// Builds a thread pool of the configured size.
    pub fn thread_pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate_and_grow() {
        let s = Caps::preset(CapsPreset::Small);
        let m = Caps::preset(CapsPreset::Medium);
        let l = Caps::preset(CapsPreset::Large);
        for c in [s, m, l] {
            c.validate().unwrap();
        }
        assert!(s.meet <= m.meet && m.meet <= l.meet);
        let bad = Caps { meet: 0, ..s };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!("dot".parse::<Format>().unwrap(), Format::Dot);
        assert!("xml".parse::<Format>().is_err());
        assert_eq!("large".parse::<CapsPreset>().unwrap(), CapsPreset::Large);
        let json = serde_json::to_string(&RunConfig::default()).unwrap();
        assert_eq!(serde_json::from_str::<RunConfig>(&json).unwrap(), RunConfig::default());
    }
}

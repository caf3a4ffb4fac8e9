//! Named verification suites, run manifests and report output.

mod config;
mod emit;
mod manifest;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::expr::parse_element;
use crate::lubin_tate::{LubinTateGroup, DEFAULT_TRUNC};
use crate::padic::{FieldSpec, PadicField, DEFAULT_PRECISION};
use crate::report::Report;
use crate::series::{precision_requirement, ASSERTION_PRECISION};
use crate::{Error, Rational, Result};

pub use config::{parse_config, ConfigFile, CONFIG_KEYS};
pub use emit::{emit_report, Format};
pub use manifest::{canonical_json, sha256_hex, Replay, RunManifest};

/// Environment variable holding the default working precision.
pub const PRECISION_ENV: &str = "LTFOURIER_PRECISION";

/// The suites `verify --suite` understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteName {
    /// Formal group and o-module axioms.
    Axioms,
    /// Torsion valuations and preimages of disks.
    Lemma32,
    /// Termwise coefficient bounds (an experiment; never fails).
    Lemma34,
    /// Period exponents, the different and the disk thresholds.
    Constants,
    /// Properties of the P_m.
    Lemma42,
    /// Translation estimate for the P_m.
    Lemma43,
    /// Level estimate for the P_m.
    Lemma44,
    /// Convergence of Mahler series from valuation profiles.
    Prop45,
    /// Pairing identities.
    Lemma46,
    /// Mahler expansion and reconstruction.
    Thm47,
    /// Mellin interpolation and the support test.
    Prop51,
}

impl SuiteName {
    pub const ALL: [SuiteName; 11] = [
        SuiteName::Axioms,
        SuiteName::Lemma32,
        SuiteName::Lemma34,
        SuiteName::Constants,
        SuiteName::Lemma42,
        SuiteName::Lemma43,
        SuiteName::Lemma44,
        SuiteName::Prop45,
        SuiteName::Lemma46,
        SuiteName::Thm47,
        SuiteName::Prop51,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::Axioms => "axioms",
            SuiteName::Lemma32 => "lemma32",
            SuiteName::Lemma34 => "lemma34",
            SuiteName::Constants => "constants",
            SuiteName::Lemma42 => "lemma42",
            SuiteName::Lemma43 => "lemma43",
            SuiteName::Lemma44 => "lemma44",
            SuiteName::Prop45 => "prop45",
            SuiteName::Lemma46 => "lemma46",
            SuiteName::Thm47 => "thm47",
            SuiteName::Prop51 => "prop51",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = SuiteName::ALL.iter().map(|n| n.as_str()).collect();
            Error::InvalidParameters(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

/// Which Frobenius series defines the group.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FrobeniusChoice {
    /// `πZ + Z^q`.
    #[default]
    Standard,
    /// `(1+Z)^p - 1` over Q_p.
    Multiplicative,
}

impl FromStr for FrobeniusChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(FrobeniusChoice::Standard),
            "multiplicative" => Ok(FrobeniusChoice::Multiplicative),
            _ => Err(Error::InvalidParameters(format!(
                "unknown Frobenius {s:?}; expected standard or multiplicative"
            ))),
        }
    }
}

/// Truncation and grid caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Truncation order of the group law.
    pub trunc: usize,
    /// Polynomial degrees in the pairing, expansion and Mellin suites.
    pub deg: usize,
    /// Largest m in the P_m grids.
    pub mmax: usize,
    /// Largest level n.
    pub nmax: u32,
}

impl Caps {
    pub fn defaults_for(suite: SuiteName) -> Self {
        let mmax = match suite {
            SuiteName::Lemma43 | SuiteName::Lemma44 => 40,
            SuiteName::Lemma34 => 30,
            _ => 12,
        };
        Caps {
            trunc: DEFAULT_TRUNC,
            deg: 6,
            mmax,
            nmax: 3,
        }
    }

    /// Degree cap of the Mahler basis a suite needs.
    fn basis_cap(&self, suite: SuiteName) -> usize {
        match suite {
            SuiteName::Lemma42 | SuiteName::Lemma43 | SuiteName::Lemma44 => self.mmax,
            SuiteName::Lemma34 => self.mmax + 1,
            SuiteName::Lemma46 => self.deg + 1,
            SuiteName::Thm47 | SuiteName::Prop51 => self.deg,
            _ => 0,
        }
    }
}

/// Precision settings: the working cap of the field and the valuation at
/// which identities are asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionSettings {
    pub working: u32,
    pub assertion: i64,
}

/// Everything a suite run depends on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRequest {
    pub suite: SuiteName,
    pub field: FieldSpec,
    /// Prime element as an expression; the field's uniformizer if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<String>,
    #[serde(default)]
    pub frobenius: FrobeniusChoice,
    pub caps: Caps,
    pub precision: PrecisionSettings,
}

/// Working precision large enough for series and P_m through `order`.
pub fn precision_for_order(p: u64, order: usize, assertion: i64) -> u32 {
    let need = precision_requirement(p, order, assertion.max(ASSERTION_PRECISION)).to_integer();
    // headroom for the precision lost in the logarithm and its powers
    u32::try_from(2 * need).unwrap_or(u32::MAX).max(DEFAULT_PRECISION)
}

/// Working precision large enough for a suite's Mahler basis.
pub fn suggested_precision(p: u64, suite: SuiteName, caps: &Caps, assertion: i64) -> u32 {
    precision_for_order(p, caps.basis_cap(suite).max(caps.trunc), assertion)
}

impl SuiteRequest {
    /// Request with default caps, the suggested precision and the default
    /// assertion precision.
    pub fn new(suite: SuiteName, p: u64, f: usize, e: usize) -> Self {
        let caps = Caps::defaults_for(suite);
        let working = suggested_precision(p, suite, &caps, ASSERTION_PRECISION);
        SuiteRequest {
            suite,
            field: FieldSpec::new(p, f, e, working),
            pi: None,
            frobenius: FrobeniusChoice::Standard,
            caps,
            precision: PrecisionSettings {
                working,
                assertion: ASSERTION_PRECISION,
            },
        }
    }

    pub fn with_caps(mut self, caps: Caps) -> Self {
        self.caps = caps;
        self.set_working_precision(suggested_precision(
            self.field.p,
            self.suite,
            &caps,
            self.precision.assertion,
        ));
        self
    }

    pub fn with_frobenius(mut self, frobenius: FrobeniusChoice) -> Self {
        self.frobenius = frobenius;
        self
    }

    pub fn set_working_precision(&mut self, working: u32) {
        self.precision.working = working;
        self.field.precision = working;
    }

    pub fn assertion_bound(&self) -> Rational {
        Rational::from_integer(self.precision.assertion)
    }

    pub fn build_field(&self) -> Result<Arc<PadicField>> {
        let mut spec = self.field.clone();
        spec.precision = self.precision.working;
        spec.build()
    }

    pub fn build_group(&self, field: &Arc<PadicField>) -> Result<LubinTateGroup> {
        build_group(field, self.pi.as_deref(), self.frobenius, self.caps.trunc)
    }

    pub fn run(&self) -> Result<Report> {
        suites::run(self)
    }
}

/// The group on `field` for a prime element given as an expression (the
/// field's uniformizer if absent) and a choice of Frobenius.
pub fn build_group(
    field: &Arc<PadicField>,
    pi: Option<&str>,
    frobenius: FrobeniusChoice,
    trunc: usize,
) -> Result<LubinTateGroup> {
    match frobenius {
        FrobeniusChoice::Multiplicative => {
            if pi.is_some() {
                return Err(Error::InvalidParameters("the multiplicative group fixes π = p".into()));
            }
            LubinTateGroup::multiplicative(field, trunc)
        }
        FrobeniusChoice::Standard => match pi {
            Some(src) => LubinTateGroup::new(field, &parse_element(field, src)?, None, trunc),
            None => LubinTateGroup::standard(field, trunc),
        },
    }
}

/// Errors that stem from how the tool was invoked rather than from a
/// computation.
pub fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::NotPrime(_)
            | Error::InvalidParameters(_)
            | Error::InvalidModulus(_)
            | Error::InvalidFrobenius(_)
            | Error::InvalidPrimeElement(_)
            | Error::RequiresBaseField(_)
            | Error::ResidueMismatch { .. }
            | Error::Parse(_)
            | Error::Unsupported(_)
            | Error::CapExceeded { .. }
    )
}

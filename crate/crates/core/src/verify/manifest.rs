use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use super::{Caps, FrobeniusChoice, PrecisionSettings, SuiteName, SuiteRequest};
use crate::padic::FieldSpec;
use crate::report::Report;
use crate::{Error, Result};

/// Compact JSON with object keys in sorted order.
pub fn canonical_json(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// A recorded suite run. Everything except `wall_clock_ms` is determined
/// by the request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub suite: SuiteName,
    pub field_spec: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<String>,
    pub frobenius: FrobeniusChoice,
    pub caps: Caps,
    pub precision: PrecisionSettings,
    pub results: Value,
    pub results_sha256: String,
    pub wall_clock_ms: u64,
}

/// Outcome of re-running a manifest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    pub identical: bool,
    pub recorded_sha256: String,
    pub replayed_sha256: String,
}

impl RunManifest {
    /// Runs the suite and records it.
    pub fn record(request: SuiteRequest) -> Result<(Self, Report)> {
        let start = Instant::now();
        let report = request.run()?;
        let results = report.to_json();
        let results_sha256 = sha256_hex(canonical_json(&results).as_bytes());
        Ok((
            RunManifest {
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
                suite: request.suite,
                field_spec: request.field,
                pi: request.pi,
                frobenius: request.frobenius,
                caps: request.caps,
                precision: request.precision,
                results,
                results_sha256,
                wall_clock_ms: start.elapsed().as_millis() as u64,
            },
            report,
        ))
    }

    pub fn request(&self) -> SuiteRequest {
        SuiteRequest {
            suite: self.suite,
            field: self.field_spec.clone(),
            pi: self.pi.clone(),
            frobenius: self.frobenius,
            caps: self.caps,
            precision: self.precision,
        }
    }

    /// Runs the recorded request again and compares the result bytes.
    pub fn replay(&self) -> Result<Replay> {
        let report = self.request().run()?;
        let bytes = canonical_json(&report.to_json());
        let replayed_sha256 = sha256_hex(bytes.as_bytes());
        Ok(Replay {
            identical: bytes == canonical_json(&self.results) && replayed_sha256 == self.results_sha256,
            recorded_sha256: self.results_sha256.clone(),
            replayed_sha256,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("manifest: {e}")))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json_string())
            .map_err(|e| Error::InvalidParameters(format!("cannot write {}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::SuiteName;

    #[test]
    fn round_trip_and_replay() {
        let req = SuiteRequest::new(SuiteName::Constants, 3, 2, 1);
        let (m, report) = RunManifest::record(req).unwrap();
        assert!(report.all_hold());
        let back = RunManifest::from_json_str(&m.to_json_string()).unwrap();
        assert_eq!(back, m);
        assert!(back.replay().unwrap().identical);
    }

    #[test]
    fn tampered_results_are_detected() {
        let req = SuiteRequest::new(SuiteName::Lemma32, 2, 1, 1);
        let (mut m, _) = RunManifest::record(req).unwrap();
        m.results = serde_json::json!({"cases": []});
        assert!(!m.replay().unwrap().identical);
    }
}

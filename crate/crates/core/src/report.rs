//! Per-case suite results and their JSON form.

use serde::Serialize;
use serde_json::Value;

/// One checked instance: its parameters, both sides, and the verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Case {
    pub params: Value,
    pub lhs: Value,
    pub rhs: Value,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Case {
    pub fn new(params: Value, lhs: Value, rhs: Value, holds: bool) -> Self {
        Case {
            params,
            lhs,
            rhs,
            holds,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub cases: Vec<Case>,
}

impl Report {
    pub fn new(cases: Vec<Case>) -> Self {
        Report { cases }
    }

    pub fn all_hold(&self) -> bool {
        self.cases.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&Case> {
        self.cases.iter().find(|c| !c.holds)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.holds).count()
    }

    pub fn count_note(&self, note: &str) -> usize {
        self.cases.iter().filter(|c| c.note.as_deref() == Some(note)).count()
    }

    pub fn extend(&mut self, other: Report) {
        self.cases.extend(other.cases);
    }

    /// `{"cases": [...]}`.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        assert_eq!(
            serde_json::to_string(&Report::default().to_json()).unwrap(),
            r#"{"cases":[]}"#
        );
        let r = Report::new(vec![Case::new(Value::Null, Value::Null, Value::Null, true)]);
        assert!(serde_json::to_string(&r.to_json()).unwrap().contains(r#""holds":true"#));
    }
}

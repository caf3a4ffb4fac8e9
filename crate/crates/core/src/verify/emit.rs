use std::io::{self, Write};

use serde_json::Value;

use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

/// Writes a report: one JSON document, or one line per case followed by a
/// summary naming the first failure.
pub fn emit_report(report: &Report, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            writeln!(out, "{}", super::canonical_json(&report.to_json()))
        }
        Format::Table => {
            for case in &report.cases {
                let verdict = if case.holds { "ok  " } else { "FAIL" };
                let note = case.note.as_deref().map(|n| format!("  [{n}]")).unwrap_or_default();
                writeln!(out, "{verdict} {}{note}", compact(&case.params))?;
                if !case.holds {
                    writeln!(out, "     lhs {}", compact(&case.lhs))?;
                    writeln!(out, "     rhs {}", compact(&case.rhs))?;
                }
            }
            writeln!(out, "{} cases, {} failures", report.cases.len(), report.failures())?;
            if let Some(first) = report.first_failure() {
                writeln!(out, "first failure: {}", compact(&first.params))?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Case;
    use serde_json::json;

    fn render(r: &Report, f: Format) -> String {
        let mut buf = Vec::new();
        emit_report(r, f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn empty_and_single() {
        assert_eq!(render(&Report::default(), Format::Json), "{\"cases\":[]}\n");
        let r = Report::new(vec![Case::new(json!({"m": 1}), json!(1), json!(1), true)]);
        assert!(render(&r, Format::Json).contains("\"holds\":true"));
    }

    #[test]
    fn failures_are_named() {
        let r = Report::new(vec![
            Case::new(json!({"m": 1}), json!(1), json!(1), true),
            Case::new(json!({"m": 2}), json!(1), json!(2), false),
        ]);
        let t = render(&r, Format::Table);
        assert!(t.contains("first failure: {\"m\":2}"));
        assert!(t.contains("2 cases, 1 failures"));
    }
}

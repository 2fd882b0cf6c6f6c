//! The run artifact and its json and text renderings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::config::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub verdict: Verdict,
    /// Empty on pass; otherwise the first offending term or the error.
    pub residual_summary: String,
    /// Number of random parameter points used; 0 for a symbolic run.
    pub trials: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub params_echo: String,
    pub seed: u64,
    pub results: Vec<CheckResult>,
    pub overall: Overall,
}

impl Report {
    /// Aggregates results; `overall` is pass iff every result passes.
    pub fn new(params_echo: String, seed: u64, results: Vec<CheckResult>) -> Report {
        let overall = if results.iter().all(|r| r.verdict == Verdict::Pass) { Overall::Pass } else { Overall::Fail };
        Report { tool_version: env!("CARGO_PKG_VERSION").to_string(), params_echo, seed, results, overall }
    }

    pub fn passed(&self) -> bool {
        self.overall == Overall::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    /// One line per check: `id  verdict  elapsed_ms`.
    pub fn to_text(&self) -> String {
        let width = self.results.iter().map(|r| r.id.len()).max().unwrap_or(0);
        self.results
            .iter()
            .map(|r| format!("{:width$}  {:5}  {}\n", r.id, r.verdict.as_str(), r.elapsed_ms))
            .collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

/// Writes the report to `path`.
pub fn emit_report(report: &Report, path: &Path, format: Format) -> std::io::Result<()> {
    std::fs::write(path, report.render(format))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(id: &str, verdict: Verdict) -> CheckResult {
        let residual_summary = if verdict == Verdict::Pass { String::new() } else { "1 term(s)".into() };
        CheckResult { id: id.into(), verdict, residual_summary, trials: 0, elapsed_ms: 12 }
    }

    #[test]
    fn aggregation() {
        let empty = Report::new("symbolic".into(), 0, vec![]);
        assert!(empty.passed());
        assert!(empty.to_json().contains("\"results\": []"));
        let r = Report::new("symbolic".into(), 0, vec![result("a", Verdict::Pass), result("b", Verdict::Fail)]);
        assert_eq!(r.overall, Overall::Fail);
        assert!(!r.results[1].residual_summary.is_empty());
        assert!(!Report::new("x".into(), 0, vec![result("c", Verdict::Error)]).passed());
    }

    #[test]
    fn json_round_trip_and_field_names() {
        let r = Report::new("q=2,a=3,b=5,c=7,d=11".into(), 42, vec![result("casimir.scalar", Verdict::Pass)]);
        let text = r.to_json();
        for key in ["tool_version", "params_echo", "seed", "results", "overall", "residual_summary", "elapsed_ms"] {
            assert!(text.contains(&format!("\"{key}\"")), "{key}");
        }
        assert!(text.contains("\"verdict\": \"pass\""));
        assert_eq!(Report::from_json(&text).unwrap(), r);
    }

    #[test]
    fn text_lines() {
        let r = Report::new("symbolic".into(), 0, vec![result("idempotents", Verdict::Pass), result("shiftops", Verdict::Fail)]);
        let text = r.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["shiftops", "fail", "12"]);
    }

    #[test]
    fn writes_files() {
        let dir = std::env::temp_dir().join(format!("daha-report-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("r.json");
        let r = Report::new("symbolic".into(), 1, vec![]);
        emit_report(&r, &path, Format::Json).unwrap();
        assert_eq!(Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap(), r);
        assert!(emit_report(&r, &dir.join("missing/r.json"), Format::Text).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}

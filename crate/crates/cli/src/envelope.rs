use serde::Serialize;
use serde_json::Value;

pub const TOOL_VERSION: &str = concat!("framecheck ", env!("CARGO_PKG_VERSION"));

/// Outcome of a single check inside an envelope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Borderline,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub borderline: usize,
    pub max_rel_diff: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_bound_ratio: Option<f64>,
}

impl Summary {
    pub fn from_statuses(
        statuses: impl IntoIterator<Item = (Status, Option<f64>, Option<f64>)>,
    ) -> Summary {
        let mut s = Summary {
            total: 0,
            passed: 0,
            failed: 0,
            borderline: 0,
            max_rel_diff: 0.0,
            min_bound_ratio: None,
        };
        for (status, rel_diff, ratio) in statuses {
            s.total += 1;
            match status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Borderline => s.borderline += 1,
            }
            if let Some(r) = rel_diff {
                s.max_rel_diff = s.max_rel_diff.max(r);
            }
            if let Some(r) = ratio {
                s.min_bound_ratio = Some(s.min_bound_ratio.map_or(r, |m: f64| m.min(r)));
            }
        }
        s
    }

    pub fn line(&self, command: &str) -> String {
        let mut line = format!(
            "{command}: total={} passed={} failed={} borderline={} max_rel_diff={:e}",
            self.total, self.passed, self.failed, self.borderline, self.max_rel_diff
        );
        if let Some(r) = self.min_bound_ratio {
            line.push_str(&format!(" min_bound_ratio={r}"));
        }
        line
    }
}

/// Top-level JSON document emitted by every report-producing command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEnvelope {
    pub tool_version: &'static str,
    pub command: String,
    pub config: Value,
    pub results: Vec<Value>,
    pub summary: Summary,
}

impl ReportEnvelope {
    pub fn new(command: &str, config: Value, results: Vec<Value>, summary: Summary) -> Self {
        ReportEnvelope {
            tool_version: TOOL_VERSION,
            command: command.to_string(),
            config,
            results,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

/// Stored counterexamples per run; the total is still counted past the cap.
pub const MAX_STORED_FAILURES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Surjectivity,
    ImageBox,
    Symbolic,
    PositiveSurjectivity,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Surjectivity => "surjectivity",
            Mode::ImageBox => "image-box",
            Mode::Symbolic => "symbolic",
            Mode::PositiveSurjectivity => "positive-surjectivity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

/// Partial result of one sweep chunk. Chunks merge in order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Tally {
    pub checked: u64,
    pub counts: BTreeMap<String, u64>,
    pub failures_total: u64,
    pub failures: Vec<Failure>,
}

impl Tally {
    pub fn count(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    pub fn fail(&mut self, input: impl ToString, expected: impl ToString, got: impl ToString) {
        self.failures_total += 1;
        if self.failures.len() < MAX_STORED_FAILURES {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self.failures_total += other.failures_total;
        let room = MAX_STORED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub mode: Mode,
    /// Bound, radius and any other knobs that determine the result.
    pub parameters: BTreeMap<String, u64>,
    pub checked: u64,
    pub counts: BTreeMap<String, u64>,
    pub failures_total: u64,
    /// At most [`MAX_STORED_FAILURES`] counterexamples, in sweep order.
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

/// Serialized form. Field order here is the output key order.
#[derive(Serialize, Deserialize)]
pub struct ReportRecord {
    pub mode: Mode,
    pub parameters: BTreeMap<String, u64>,
    pub checked: u64,
    pub counts: BTreeMap<String, u64>,
    pub failures_total: u64,
    pub failures: Vec<Failure>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub(crate) fn from_tally(mode: Mode, parameters: &[(&str, u64)], tally: Tally, elapsed: Duration) -> Self {
        VerificationReport {
            mode,
            parameters: parameters.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            checked: tally.checked,
            counts: tally.counts,
            failures_total: tally.failures_total,
            failures: tally.failures,
            elapsed,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_record(&self, include_timing: bool) -> ReportRecord {
        ReportRecord {
            mode: self.mode,
            parameters: self.parameters.clone(),
            checked: self.checked,
            counts: self.counts.clone(),
            failures_total: self.failures_total,
            failures: self.failures.clone(),
            verdict: self.verdict().to_string(),
            elapsed_ms: include_timing.then_some(self.elapsed.as_millis() as u64),
        }
    }

    /// One JSON object on one line. Without timing the line depends only on
    /// the inputs, so reruns compare byte for byte.
    pub fn to_json_line(&self, include_timing: bool) -> String {
        serde_json::to_string(&self.to_record(include_timing)).expect("report serializes")
    }

    /// Human-readable one-liner.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "{} [{}]: {} ({} checked, {} failures) in {} ms",
            self.mode,
            params.join(", "),
            self.verdict().to_uppercase(),
            self.checked,
            self.failures_total,
            self.elapsed.as_millis()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_caps_failures_in_order() {
        let mut a = Tally::default();
        for i in 0..70 {
            a.fail(i, "e", "g");
        }
        let mut b = Tally::default();
        for i in 70..150 {
            b.fail(i, "e", "g");
        }
        let m = a.merge(b);
        assert_eq!(m.failures_total, 150);
        assert_eq!(m.failures.len(), MAX_STORED_FAILURES);
        assert_eq!(m.failures[99].input, "99");
    }

    #[test]
    fn json_line_is_stable() {
        let mut t = Tally {
            checked: 3,
            ..Tally::default()
        };
        t.count("points", 3);
        let r = VerificationReport::from_tally(Mode::ImageBox, &[("radius", 0)], t, Duration::from_millis(12));
        assert_eq!(
            r.to_json_line(false),
            r#"{"mode":"image-box","parameters":{"radius":0},"checked":3,"counts":{"points":3},"failures_total":0,"failures":[],"verdict":"pass"}"#
        );
        assert!(r.to_json_line(true).ends_with(r#""verdict":"pass","elapsed_ms":12}"#));
        assert_eq!(r.summary(), "image-box [radius=0]: PASS (3 checked, 0 failures) in 12 ms");
        let back: ReportRecord = serde_json::from_str(&r.to_json_line(true)).unwrap();
        assert_eq!(back.elapsed_ms, Some(12));
    }
}

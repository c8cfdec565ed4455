//! Machine- and human-readable reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use colorlie::verdict::{Report, Verdict};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub tuple: Vec<usize>,
    pub labels: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOut {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl From<&Verdict> for CheckOut {
    fn from(v: &Verdict) -> Self {
        match v {
            Verdict::Pass => CheckOut {
                status: Status::Pass,
                witness: None,
                reason: None,
            },
            Verdict::Fail(w) => CheckOut {
                status: Status::Fail,
                witness: Some(WitnessOut {
                    tuple: w.tuple.clone(),
                    labels: w.labels.clone(),
                    lhs: w.lhs.clone(),
                    rhs: w.rhs.clone(),
                }),
                reason: None,
            },
            Verdict::Skipped(why) => CheckOut {
                status: Status::Skipped,
                witness: None,
                reason: Some(why.clone()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOut {
    pub kind: String,
    pub message: String,
}

/// Everything a command produced. Checks are keyed by name, so the order in
/// which they were computed does not matter.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CliReport {
    pub command: String,
    pub input_sha256: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: BTreeMap<String, CheckOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorOut>,
    /// Wall-clock time; shown in text output only so JSON stays reproducible.
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

impl CliReport {
    pub fn new(command: impl Into<String>, input: &[u8]) -> Self {
        CliReport {
            command: command.into(),
            input_sha256: digest(input),
            seed: None,
            checks: BTreeMap::new(),
            output: None,
            error: None,
            elapsed: None,
        }
    }

    pub fn add(&mut self, report: &Report) {
        for c in &report.checks {
            self.checks.insert(c.name.clone(), CheckOut::from(&c.verdict));
        }
    }

    pub fn fail_with(&mut self, e: &CliError) {
        self.error = Some(ErrorOut {
            kind: e.kind().to_string(),
            message: e.to_string(),
        });
    }

    /// 0 when every check passed, 1 when one failed, 2 on an input error.
    pub fn exit_code(&self) -> i32 {
        if self.error.is_some() {
            2
        } else if self.checks.values().any(|c| c.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "input sha256: {}", self.input_sha256);
        if let Some(seed) = self.seed {
            let _ = writeln!(s, "seed: {seed}");
        }
        for (name, c) in &self.checks {
            match c.status {
                Status::Pass => {
                    let _ = writeln!(s, "PASS {name}");
                }
                Status::Fail => {
                    let w = c.witness.as_ref().expect("failures carry witnesses");
                    let _ = writeln!(s, "FAIL {name} at ({}): {} != {}", w.labels.join(", "), w.lhs, w.rhs);
                }
                Status::Skipped => {
                    let _ = writeln!(s, "SKIP {name} ({})", c.reason.as_deref().unwrap_or(""));
                }
            }
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error ({}): {}", e.kind, e.message);
        }
        if let Some(out) = &self.output {
            let _ = writeln!(s, "output: {out}");
        }
        if let Some(t) = self.elapsed {
            let _ = writeln!(s, "elapsed: {:.3} s", t.as_secs_f64());
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use colorlie::verdict::Witness;

    #[test]
    fn exit_codes() {
        let mut r = CliReport::new("check lie", b"{}");
        assert_eq!(r.exit_code(), 0);
        r.add(&Report::new().with("skew", Verdict::Skipped("n/a".into())));
        assert_eq!(r.exit_code(), 0);
        let w = Witness::new(vec![0], vec!["x".into()], "1".into(), "0".into());
        r.add(&Report::new().with("jacobi", Verdict::Fail(w)));
        assert_eq!(r.exit_code(), 1);
        r.fail_with(&CliError::UnboundSymbol);
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn json_and_text_agree_on_verdicts() {
        let mut r = CliReport::new("check lie", b"");
        let w = Witness::new(vec![0, 1], vec!["x".into(), "y".into()], "{x: 1}".into(), "0".into());
        r.add(&Report::new().with("b", Verdict::Pass).with("a", Verdict::Fail(w)));
        let back: CliReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let text = r.to_text();
        assert!(text.contains("FAIL a at (x, y): {x: 1} != 0"));
        assert!(text.find("FAIL a").unwrap() < text.find("PASS b").unwrap());
    }
}

//! Verification reports: one entry per checked identity, each tagged with
//! the label of the statement it checks.

use serde::Serialize;

use crate::error::Result;
use crate::liealg::Violation;
use crate::tensorspace::Tensor;

/// Every anchor a report line can carry.
pub const ANCHORS: &[&str] = &[
    "de-Poisson-space", "de-lag-splitting", "de-mixed-general", "de-mixed-product-r", "eq-CYB-Lam",
    "eq-CYB-Lam-s", "eq-CYB-r", "eq-CYB-s", "eq-Lambda-d", "eq-Mix-r-sharp", "eq-Qm-pim", "eq-bra-d",
    "eq-cocycle-def", "eq-de-l-pm", "eq-delta-12-C", "eq-delta-d-g-g", "eq-delta-r", "eq-diagonal-Lam",
    "eq-double-r", "eq-g1g1", "eq-iden-ggg", "eq-n-splitting", "eq-p-sJ", "eq-pairing-dd",
    "eq-pairing-ll", "eq-phi-mk", "eq-pi-mixed-1", "eq-pi-mixed-2", "eq-pi-n", "eq-ppm", "eq-q",
    "eq-r-2-m", "eq-r-2-p", "eq-r-ep-tau-n", "eq-r-modify", "eq-r-n-def", "eq-r-ppm", "eq-t-n",
    "eq-zetaj", "le-admi-r-equi", "le-dn-g2n", "le-dn-g2n-1", "le-double-uble-r", "le-drinfi-r-0",
    "le-lpm-dual", "le-quasi-twisting", "le-rr-quasi", "le-t-r", "le-twisting", "le-uble-mixed-1",
    "le-uble-mixed-2", "pr-admi-Poi-r", "pr-functors-commute", "pr-mixed-is-poisson",
    "pr-n-mixed-product", "pr-uble-mixed-power", "re-fusion-order", "re-mixed-term", "re-r-fpm",
    "re-rd-n", "re-step-by-step", "re-tau-r", "subsec-Lie-bialgebras", "subsec-Poi-r-mixed",
    "subsec-double", "subsec-mixed-fusion", "subsec-mixed-powers", "subsec-polyuble",
    "subsec-r-matrices", "subsec-twists", "th-piY-Mix-r", "th-uble-r",
];

/// How many failing basis tuples a detail line lists before truncating.
const SHOWN: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub anchor: String,
    pub subject: String,
    pub identity: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    /// `PASS [anchor] suite subject: identity (detail)`.
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{status} [{}] {} {}: {}", self.anchor, self.suite, self.subject, self.identity);
        if !self.detail.is_empty() {
            s.push_str(&format!(" ({})", self.detail));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub manifest: String,
    pub profile: String,
    pub suites: Vec<String>,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(manifest: &str, profile: &str, suites: Vec<String>, checks: Vec<Check>) -> Report {
        let passed = checks.iter().filter(|c| c.passed).count();
        let failed = checks.len() - passed;
        Report { manifest: manifest.into(), profile: profile.into(), suites, passed, failed, checks }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn text(&self) -> String {
        self.checks.iter().map(|c| c.line() + "\n").collect()
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Collects checks for one suite and subject.
pub struct Recorder {
    suite: String,
    subject: String,
    checks: Vec<Check>,
}

fn list(vs: &[Violation]) -> String {
    let shown: Vec<String> = vs.iter().take(SHOWN).map(Violation::to_string).collect();
    let more = if vs.len() > SHOWN { format!(" and {} more", vs.len() - SHOWN) } else { String::new() };
    format!("fails at {}{more}", shown.join(", "))
}

impl Recorder {
    pub fn new(suite: &str, subject: &str) -> Recorder {
        Recorder { suite: suite.into(), subject: subject.into(), checks: Vec::new() }
    }

    pub fn finish(self) -> Vec<Check> {
        self.checks
    }

    pub fn record(&mut self, anchor: &str, identity: &str, passed: bool, detail: String) {
        self.checks.push(Check {
            suite: self.suite.clone(),
            anchor: anchor.into(),
            subject: self.subject.clone(),
            identity: identity.into(),
            passed,
            detail,
        });
    }

    /// Passes when no basis tuple violates the identity.
    pub fn violations(&mut self, anchor: &str, identity: &str, found: Result<Vec<Violation>>) {
        match found {
            Ok(v) if v.is_empty() => self.record(anchor, identity, true, String::new()),
            Ok(v) => self.record(anchor, identity, false, list(&v)),
            Err(e) => self.record(anchor, identity, false, format!("error: {e}")),
        }
    }

    pub fn holds(&mut self, anchor: &str, identity: &str, found: Result<bool>) {
        self.holds_with(anchor, identity, found.map(|b| (b, String::new())));
    }

    /// Like [`Recorder::holds`] with a detail string kept on success too.
    pub fn holds_with(&mut self, anchor: &str, identity: &str, found: Result<(bool, String)>) {
        match found {
            Ok((b, detail)) => self.record(anchor, identity, b, detail),
            Err(e) => self.record(anchor, identity, false, format!("error: {e}")),
        }
    }

    /// Passes when the defect tensor is exactly zero.
    pub fn vanishes(&mut self, anchor: &str, identity: &str, defect: Result<Tensor>) {
        match defect {
            Ok(t) if t.is_zero() => self.record(anchor, identity, true, String::new()),
            Ok(t) => self.record(anchor, identity, false, format!("{} nonzero entries", t.nnz())),
            Err(e) => self.record(anchor, identity, false, format!("error: {e}")),
        }
    }
}

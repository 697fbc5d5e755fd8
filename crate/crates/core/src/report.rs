//! Machine-readable verification reports: a named list of checks, each
//! with a numeric value, a pass flag, and a citation anchor into the
//! accompanying text, plus a list of documented discrepancies that the
//! checks surfaced.

use serde::{Deserialize, Serialize};

/// One verified claim. `value` is the measured residual or quantity;
/// `reference` anchors the claim in the source text.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub pass: bool,
    pub reference: String,
}

/// Tolerances in force for a report.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Tolerances {
    pub default: f64,
    pub closure: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    /// Unix seconds; absent when suppressed for byte-identical output.
    pub timestamp: Option<u64>,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub checks: Vec<Check>,
    /// Documented deviations between the source text and the oracle
    /// results, surfaced by this suite's checks.
    pub discrepancies: Vec<String>,
}

impl Report {
    pub fn new(suite: &str, seed: u64, tolerances: Tolerances) -> Self {
        Report {
            suite: suite.to_string(),
            timestamp: None,
            seed,
            tolerances,
            checks: Vec::new(),
            discrepancies: Vec::new(),
        }
    }

    /// Records a residual-style check: passes when |value| <= bound.
    pub fn residual(&mut self, name: &str, value: f64, bound: f64, reference: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            value,
            pass: value.abs() <= bound,
            reference: reference.to_string(),
        });
    }

    /// Records a boolean check with an associated value.
    pub fn claim(&mut self, name: &str, value: f64, pass: bool, reference: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            value,
            pass,
            reference: reference.to_string(),
        });
    }

    pub fn discrepancy(&mut self, text: &str) {
        self.discrepancies.push(text.to_string());
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// Merges another report's checks and discrepancies into this one,
    /// prefixing check names with the source suite.
    pub fn absorb(&mut self, other: Report) {
        for mut check in other.checks {
            check.name = format!("{}/{}", other.suite, check.name);
            self.checks.push(check);
        }
        self.discrepancies.extend(other.discrepancies);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable one-line-per-check rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {} (seed {}, tol {:e})\n",
            self.suite, self.seed, self.tolerances.default
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {} = {:.3e}  ({})\n",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                c.value,
                c.reference
            ));
        }
        for d in &self.discrepancies {
            out.push_str(&format!("  note: {d}\n"));
        }
        out
    }
}

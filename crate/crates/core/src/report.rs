use serde::{Deserialize, Serialize};
use std::fmt;

/// One verified law, with a witness when it failed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckItem {
    pub law: String,
    pub ok: bool,
    /// Witnessing tuple for a failure, human-readable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Aggregated result of a structural check.
///
/// Checks never abort on the first failed law; they collect every failure
/// together with a witnessing tuple so the caller can see all of them.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<CheckItem>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), checks: Vec::new() }
    }

    pub fn pass(&mut self, law: impl Into<String>) {
        self.checks.push(CheckItem { law: law.into(), ok: true, witness: None });
    }

    pub fn fail(&mut self, law: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(CheckItem { law: law.into(), ok: false, witness: Some(witness.into()) });
    }

    pub fn record(&mut self, law: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass(law);
        } else {
            self.fail(law, witness());
        }
    }

    /// Fold another report into this one, prefixing its law names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for item in other.checks {
            self.checks.push(CheckItem {
                law: format!("{prefix}: {}", item.law),
                ok: item.ok,
                witness: item.witness,
            });
        }
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.ok() { "pass" } else { "FAIL" })?;
        for item in &self.checks {
            if item.ok {
                writeln!(f, "  ok   {}", item.law)?;
            } else {
                writeln!(
                    f,
                    "  FAIL {}  [{}]",
                    item.law,
                    item.witness.as_deref().unwrap_or("no witness")
                )?;
            }
        }
        Ok(())
    }
}

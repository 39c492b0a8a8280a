//! Verification reports shared by every checker and by the command line.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, ok: bool, witness: Option<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
        }
    }

    pub fn pass(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check::new(name, anchor, true, None)
    }

    pub fn fail(name: impl Into<String>, anchor: impl Into<String>, witness: impl Into<String>) -> Self {
        Check::new(name, anchor, false, Some(witness.into()))
    }

    pub fn vacuous(name: impl Into<String>, anchor: impl Into<String>, note: impl Into<String>) -> Self {
        Check { name: name.into(), anchor: anchor.into(), status: Status::Vacuous, witness: Some(note.into()) }
    }

    /// Attaches an informational note even to passing checks.
    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.witness = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub bounds: BTreeMap<String, serde_json::Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), bounds: BTreeMap::new(), checks: Vec::new() }
    }

    pub fn bound(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.bounds.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        for (k, v) in other.bounds {
            self.bounds.entry(k).or_insert(v);
        }
    }

    /// True iff every non-vacuous check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        for (k, v) in &self.bounds {
            writeln!(f, "  bound {k} = {v}")?;
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Vacuous => "VACUOUS",
            };
            write!(f, "[{tag}] {} ({})", c.name, c.anchor)?;
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuous_checks_do_not_fail() {
        let mut r = Report::new("demo");
        r.push(Check::pass("a", "x"));
        r.push(Check::vacuous("b", "y", "no instances"));
        assert!(r.passed());
        r.push(Check::fail("c", "z", "boom"));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn json_schema_keys() {
        let mut r = Report::new("demo").bound("N", 4);
        r.push(Check::pass("a", "x"));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["suite"], "demo");
        assert_eq!(v["bounds"]["N"], 4);
        assert_eq!(v["checks"][0]["status"], "pass");
    }
}

use std::fmt::{self, Display, Write as _};

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub claims: Vec<Claim>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport { suite: suite.into(), claims: Vec::new(), pass: true }
    }

    /// Records a claim; it passes when both sides render identically.
    pub fn compare(&mut self, id: impl Into<String>, expected: impl Display, computed: impl Display) -> bool {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let pass = expected == computed;
        self.push(Claim { id: id.into(), expected, computed, pass })
    }

    pub fn check(&mut self, id: impl Into<String>, holds: bool) -> bool {
        self.compare(id, true, holds)
    }

    pub fn push(&mut self, claim: Claim) -> bool {
        let pass = claim.pass;
        self.pass &= pass;
        self.claims.push(claim);
        pass
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for mut c in other.claims {
            c.id = format!("{}/{}", other.suite, c.id);
            self.push(c);
        }
    }

    pub fn failures(&self) -> usize {
        self.claims.iter().filter(|c| !c.pass).count()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} claims, {} failed)",
            self.suite,
            if self.pass { "PASS" } else { "FAIL" },
            self.claims.len(),
            self.failures()
        )
    }

    /// Unified-diff style listing of the failing claims, expected first.
    pub fn diff(&self) -> String {
        let mut s = String::new();
        if self.pass {
            return s;
        }
        let _ = writeln!(s, "--- expected\n+++ computed");
        for c in self.claims.iter().filter(|c| !c.pass) {
            let _ = writeln!(s, "@@ {} @@\n-{}\n+{}", c.id, c.expected, c.computed);
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report json")
    }
}

impl Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        write!(f, "{}", self.diff())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_tracks_failures() {
        let mut r = VerificationReport::new("t");
        r.compare("a", 1, 1);
        assert!(r.pass);
        r.compare("b", 2, 3);
        r.check("c", true);
        assert!(!r.pass);
        assert_eq!(r.failures(), 1);
        assert!(r.diff().contains("@@ b @@\n-2\n+3"));
        let back: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back["claims"].as_array().unwrap().len(), 3);
    }
}

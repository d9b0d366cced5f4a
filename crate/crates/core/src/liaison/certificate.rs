//! Machine-checkable records of what a construction verified.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub const CAVEAT: &str = "per-instance statement over F_p at the recorded seed; characteristic-0 transfer not certified";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

impl Claim {
    /// Passes iff the two values serialize to the same JSON.
    pub fn new(name: impl Into<String>, expected: impl Serialize, computed: impl Serialize) -> Self {
        let expected = serde_json::to_value(expected).expect("claim value serializes");
        let computed = serde_json::to_value(computed).expect("claim value serializes");
        let pass = expected == computed;
        Claim { name: name.into(), expected, computed, pass }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub pipeline: String,
    pub prime: u64,
    pub seed: u64,
    pub retries: u32,
    pub claims: Vec<Claim>,
    pub pass: bool,
    #[serde(default)]
    pub caveat: String,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(pipeline: &str, prime: u64, seed: u64) -> Self {
        Certificate {
            pipeline: pipeline.to_string(),
            prime,
            seed,
            retries: 0,
            claims: Vec::new(),
            pass: true,
            caveat: CAVEAT.to_string(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, claim: Claim) {
        self.pass &= claim.pass;
        self.claims.push(claim);
    }

    pub fn extend(&mut self, claims: impl IntoIterator<Item = Claim>) {
        for c in claims {
            self.push(c);
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Claim> {
        self.claims.iter().find(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }

    /// Internal inconsistencies: a claim whose `pass` disagrees with its values, or an overall
    /// verdict that disagrees with the claims.
    pub fn inconsistencies(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in &self.claims {
            if c.pass != (c.expected == c.computed) {
                out.push(format!("claim {:?} marked pass={} but expected {} vs computed {}", c.name, c.pass, c.expected, c.computed));
            }
        }
        let all = self.claims.iter().all(|c| c.pass);
        if self.pass != all {
            out.push(format!("overall pass={} but claims say {all}", self.pass));
        }
        out
    }

    /// Claim names whose values differ between two certificates (for replays).
    pub fn diverging_claims(&self, other: &Certificate) -> Vec<String> {
        let mut out: Vec<String> = self
            .claims
            .iter()
            .filter(|c| other.claim(&c.name) != Some(c))
            .map(|c| c.name.clone())
            .collect();
        out.extend(other.claims.iter().filter(|c| self.claim(&c.name).is_none()).map(|c| c.name.clone()));
        out
    }

    /// Fixed-width table for terminals.
    pub fn table(&self) -> String {
        let w = self.claims.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let mut s = format!(
            "{} p={} seed={} retries={}\n{:<w$}  {:>14}  {:>14}  result\n",
            self.pipeline, self.prime, self.seed, self.retries, "claim", "expected", "computed"
        );
        for c in &self.claims {
            s.push_str(&format!(
                "{:<w$}  {:>14}  {:>14}  {}\n",
                c.name,
                c.expected.to_string(),
                c.computed.to_string(),
                if c.pass { "pass" } else { "FAIL" }
            ));
        }
        s.push_str(&format!("overall: {}\n", if self.pass { "PASS" } else { "FAIL" }));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_and_tampering() {
        let mut c = Certificate::new("toy", 10007, 1);
        c.push(Claim::new("degree", 14, 14));
        c.push(Claim::new("smooth", true, true));
        assert!(c.pass && c.inconsistencies().is_empty());
        let mut back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        back.claims[0].computed = serde_json::json!(15);
        assert_eq!(back.inconsistencies().len(), 1);
        back.pass = false;
        assert_eq!(back.inconsistencies().len(), 2);
        assert_eq!(c.diverging_claims(&back), vec!["degree".to_string()]);
        c.push(Claim::new("pa", 8, 9));
        assert!(!c.pass);
        assert_eq!(c.first_failure().unwrap().name, "pa");
        assert!(c.table().contains("FAIL"));
    }
}

//! The report every command produces, and its two renderings.

use dumas::text::{format_univariate, format_valuation};
use dumas::{Certificate, Verdict};
use serde_json::{json, Map, Value};

/// Outcome of a command. Exit codes depend on this alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Certified,
    Conjectural,
    NoCertificate,
    Inconclusive,
    Reducible,
    AxiomViolation,
    Ok,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Certified => "irreducible-certified",
            Outcome::Conjectural => "conjectural-certificate",
            Outcome::NoCertificate => "no-certificate",
            Outcome::Inconclusive => "inconclusive",
            Outcome::Reducible => "reducible",
            Outcome::AxiomViolation => "axiom-violation",
            Outcome::Ok => "ok",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Certified | Outcome::Ok => 0,
            Outcome::Conjectural => 1,
            Outcome::NoCertificate | Outcome::Inconclusive | Outcome::AxiomViolation => 2,
            Outcome::Reducible => 3,
        }
    }
}

impl From<Verdict> for Outcome {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::IrreducibleCertified => Outcome::Certified,
            Verdict::ConjecturalCertificate => Outcome::Conjectural,
            Verdict::NoCertificate => Outcome::NoCertificate,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conditions {
    pub a: bool,
    pub b: bool,
    pub failing: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub ring: Option<String>,
    pub input: Option<String>,
    pub outcome: Outcome,
    pub theorem_backed: bool,
    pub valuation: Option<String>,
    pub values: Vec<String>,
    pub conditions: Option<Conditions>,
    /// Found factor and cofactor.
    pub witness: Option<(String, String)>,
    pub seed: Option<u64>,
    /// Command-specific fields, in insertion order.
    pub details: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &str, outcome: Outcome) -> Self {
        Report {
            command: command.to_string(),
            ring: None,
            input: None,
            outcome,
            theorem_backed: false,
            valuation: None,
            values: Vec::new(),
            conditions: None,
            witness: None,
            seed: None,
            details: Vec::new(),
        }
    }

    pub fn from_certificate(command: &str, c: &Certificate) -> Self {
        let mut r = Report::new(command, c.verdict.into());
        r.ring = Some(c.ring.to_string());
        r.input = format_univariate(&c.poly).ok();
        r.theorem_backed = c.theorem_backed;
        r.valuation = Some(format_valuation(&c.ring, &c.valuation));
        r.values = c.report.values.iter().map(ToString::to_string).collect();
        r.conditions = Some(Conditions {
            a: c.report.a_ok(),
            b: c.report.b_ok(),
            failing: c.report.failing.clone(),
        });
        r.detail("kind", c.report.kind.to_string());
        r.detail("rule", c.rule.to_string());
        if let Err(why) = &c.report.a {
            r.detail("a_failure", why.clone());
        }
        r.detail("strict", c.report.strict);
        r.detail("preconditions", c.preconditions.clone());
        r.detail("notes", c.notes.clone());
        r
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.details.push((key.to_string(), value.into()));
        self
    }

    pub fn exit_code(&self) -> i32 {
        self.outcome.exit_code()
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("ring".into(), json!(self.ring));
        m.insert("input".into(), json!(self.input));
        m.insert("verdict".into(), json!(self.outcome.as_str()));
        m.insert("theorem_backed".into(), json!(self.theorem_backed));
        m.insert("valuation".into(), json!(self.valuation));
        m.insert("values".into(), json!(self.values));
        m.insert(
            "conditions".into(),
            match &self.conditions {
                Some(c) => json!({
                    "A": c.a,
                    "B": c.b,
                    "failing_indices": c.failing.iter().map(ToString::to_string).collect::<Vec<_>>(),
                }),
                None => Value::Null,
            },
        );
        if let Some((g, h)) = &self.witness {
            m.insert("witness".into(), json!({ "g": g, "h": h }));
        }
        if let Some(s) = self.seed {
            m.insert("seed".into(), json!(s.to_string()));
        }
        if !self.details.is_empty() {
            m.insert(
                "details".into(),
                Value::Object(self.details.iter().cloned().collect()),
            );
        }
        Value::Object(m)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &str| {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(v);
            out.push('\n');
        };
        line("command", &self.command);
        if let Some(r) = &self.ring {
            line("ring", r);
        }
        if let Some(i) = &self.input {
            line("input", i);
        }
        if let Some(v) = &self.valuation {
            line("valuation", v);
        }
        if !self.values.is_empty() {
            line("values", &self.values.join(", "));
        }
        if let Some(c) = &self.conditions {
            line("A", if c.a { "holds" } else { "fails" });
            let b = if c.b {
                "holds".to_string()
            } else {
                let js: Vec<String> = c.failing.iter().map(ToString::to_string).collect();
                format!("fails at j = {}", js.join(", "))
            };
            line("B", &b);
        }
        if let Some((g, h)) = &self.witness {
            line("factor", g);
            line("cofactor", h);
        }
        if let Some(s) = self.seed {
            line("seed", &s.to_string());
        }
        for (k, v) in &self.details {
            line(k, &plain(v));
        }
        let backed = if self.theorem_backed {
            " (theorem-backed)"
        } else {
            ""
        };
        line("verdict", &format!("{}{backed}", self.outcome.as_str()));
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_object()) => {
            items.iter().map(plain).collect::<Vec<_>>().join("; ")
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let codes: Vec<i32> = [
            Outcome::Certified,
            Outcome::Conjectural,
            Outcome::NoCertificate,
            Outcome::Inconclusive,
            Outcome::Reducible,
            Outcome::AxiomViolation,
            Outcome::Ok,
        ]
        .iter()
        .map(|o| o.exit_code())
        .collect();
        assert_eq!(codes, [0, 1, 2, 2, 3, 2, 0]);
    }

    #[test]
    fn optional_fields() {
        let mut r = Report::new("norm", Outcome::Ok);
        let j = r.to_json();
        assert!(j.get("witness").is_none() && j.get("seed").is_none());
        assert_eq!(j["conditions"], Value::Null);
        r.seed = Some(u64::MAX);
        r.witness = Some(("X - 1".into(), "X + 1".into()));
        let j = r.to_json();
        assert_eq!(j["seed"], json!("18446744073709551615"));
        assert_eq!(j["witness"]["h"], json!("X + 1"));
        assert!(r.to_text().ends_with("verdict: ok\n"));
    }
}

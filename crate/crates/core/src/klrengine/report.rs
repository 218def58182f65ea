//! Verification results and their serialization.

use std::fmt;

use serde::Serialize;
use serde_json::Value;

use super::operator::DiagramOperator;
use super::thick::ThickError;

/// One verified identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn pass(check: &str, params: Value) -> Self {
        CheckResult { check: check.to_string(), params, pass: true, counterexample: None }
    }

    pub fn fail(check: &str, params: Value, why: impl Into<String>) -> Self {
        CheckResult { check: check.to_string(), params, pass: false, counterexample: Some(why.into()) }
    }

    /// Pass iff the condition holds.
    pub fn expect(check: &str, params: Value, ok: bool, why: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(check, params)
        } else {
            Self::fail(check, params, why())
        }
    }

    /// Pass iff both sides compile and agree as operators.
    pub fn equal(
        check: &str,
        params: Value,
        lhs: Result<DiagramOperator, ThickError>,
        rhs: Result<DiagramOperator, ThickError>,
    ) -> Self {
        match (lhs, rhs) {
            (Err(e), _) | (_, Err(e)) => Self::fail(check, params, format!("error: {e}")),
            (Ok(l), Ok(r)) => {
                if l == r {
                    return Self::pass(check, params);
                }
                let why = match l.sub(&r) {
                    Ok(d) => format!("lhs - rhs = {}", truncate(&d.to_string(), 400)),
                    Err(e) => format!("error: {e}"),
                };
                Self::fail(check, params, why)
            }
        }
    }

    /// Pass iff the operator compiles to zero.
    pub fn zero(check: &str, params: Value, op: Result<DiagramOperator, ThickError>) -> Self {
        match op {
            Err(e) => Self::fail(check, params, format!("error: {e}")),
            Ok(o) if o.is_zero() => Self::pass(check, params),
            Ok(o) => Self::fail(check, params, format!("nonzero: {}", truncate(&o.to_string(), 400))),
        }
    }
}

fn truncate(s: &str, n: usize) -> String {
    if s.chars().count() <= n {
        s.to_string()
    } else {
        let head: String = s.chars().take(n).collect();
        format!("{head}…")
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {}", self.check, self.params)?;
        if let Some(c) = &self.counterexample {
            write!(f, " -- {c}")?;
        }
        Ok(())
    }
}

/// A batch of results under a versioned schema.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn new(results: Vec<CheckResult>) -> Self {
        Report { schema: 1, results }
    }

    pub fn extend(&mut self, more: Vec<CheckResult>) {
        self.results.extend(more);
    }

    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.pass).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out.push_str(&format!("{} checks, {} passed, {} failed\n", self.results.len(), self.passed(), self.results.len() - self.passed()));
        out
    }
}

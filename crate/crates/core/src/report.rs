//! Verdicts, clauses and counterexamples shared by every checker.

use serde::{Deserialize, Serialize};

/// Outcome of a check.
///
/// `Unknown` means no witness was found and none of our results rules the
/// property out; `Undetermined` means exact elimination ran out of unit
/// pivots over a non-field ring. Neither is a failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
    Undetermined,
}

impl Verdict {
    fn severity(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::Unknown => 1,
            Verdict::Undetermined => 2,
            Verdict::Fail => 3,
        }
    }

    /// The more severe of two verdicts.
    pub fn and(self, other: Verdict) -> Verdict {
        if other.severity() > self.severity() {
            other
        } else {
            self
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == Verdict::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Unknown => "unknown",
            Verdict::Undetermined => "undetermined",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The inputs of a violated identity and its two sides, all rendered as
/// labelled combinations or literals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(inputs: Vec<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Counterexample { inputs, lhs: lhs.into(), rhs: rhs.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Clause {
    pub fn pass(name: impl Into<String>) -> Self {
        Clause { name: name.into(), verdict: Verdict::Pass, detail: None, counterexample: None }
    }

    pub fn fail(name: impl Into<String>, cx: Counterexample) -> Self {
        Clause { name: name.into(), verdict: Verdict::Fail, detail: None, counterexample: Some(cx) }
    }

    pub fn with_verdict(name: impl Into<String>, verdict: Verdict, detail: impl Into<String>) -> Self {
        Clause { name: name.into(), verdict, detail: Some(detail.into()), counterexample: None }
    }

    /// Pass when `cx` is `None`, otherwise fail with it.
    pub fn from_search(name: impl Into<String>, cx: Option<Counterexample>) -> Self {
        match cx {
            None => Clause::pass(name),
            Some(cx) => Clause::fail(name, cx),
        }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

/// An ordered list of clauses; the overall verdict is the most severe one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub clauses: Vec<Clause>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn push(&mut self, c: Clause) {
        self.clauses.push(c);
    }

    /// Appends the clauses of `other`, prefixing their names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut c in other.clauses {
            c.name = format!("{prefix}{}", c.name);
            self.clauses.push(c);
        }
    }

    pub fn verdict(&self) -> Verdict {
        self.clauses.iter().fold(Verdict::Pass, |v, c| v.and(c.verdict))
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Verdict::Pass
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn first_counterexample(&self) -> Option<&Counterexample> {
        self.clauses.iter().find_map(|c| c.counterexample.as_ref())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.verdict.is_fail())
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.clauses {
            write!(f, "  {:<12} {}", c.verdict.as_str(), c.name)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
            if let Some(cx) = &c.counterexample {
                writeln!(f, "      at [{}]: {} != {}", cx.inputs.join(", "), cx.lhs, cx.rhs)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn severity_order() {
        use Verdict::*;
        assert_eq!(Pass.and(Unknown), Unknown);
        assert_eq!(Unknown.and(Undetermined), Undetermined);
        assert_eq!(Fail.and(Undetermined), Fail);
        assert_eq!(Undetermined.and(Pass), Undetermined);
    }

    #[test]
    fn report_verdict_and_first_counterexample() {
        let mut r = CheckReport::new();
        assert_eq!(r.verdict(), Verdict::Pass);
        r.push(Clause::pass("a"));
        r.push(Clause::fail("b", Counterexample::new(vec!["x".into()], "1", "2")));
        r.push(Clause::fail("c", Counterexample::new(vec!["y".into()], "3", "4")));
        assert_eq!(r.verdict(), Verdict::Fail);
        assert_eq!(r.first_counterexample().unwrap().inputs, ["x"]);
        assert_eq!(r.failures().count(), 2);
    }

    #[test]
    fn verdicts_serialize_lowercase() {
        assert_eq!(serde_json::to_string(&Verdict::Undetermined).unwrap(), "\"undetermined\"");
        let v: Verdict = serde_json::from_str("\"unknown\"").unwrap();
        assert_eq!(v, Verdict::Unknown);
    }
}

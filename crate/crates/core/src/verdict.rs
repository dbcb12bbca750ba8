use std::fmt;

use serde::Serialize;

/// Outcome of a single check. Failures carry a human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail(String),
}

impl Verdict {
    pub fn fail(msg: impl Into<String>) -> Self {
        Verdict::Fail(msg.into())
    }

    pub fn from_bool(ok: bool, msg: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail(msg())
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(m) => Some(m),
        }
    }

    /// Keeps the first failure.
    pub fn and(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if self.is_pass() {
            next()
        } else {
            self
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(m) => write!(f, "FAIL ({m})"),
        }
    }
}

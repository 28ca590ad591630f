use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of one verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Status {
    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail(_))
    }

    pub fn fail(msg: impl Into<String>) -> Status {
        Status::Fail(msg.into())
    }

    pub fn skipped(msg: impl Into<String>) -> Status {
        Status::Skipped(msg.into())
    }

    /// Pass iff the condition holds.
    pub fn check(ok: bool, what: impl FnOnce() -> String) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail(what())
        }
    }

    /// First failure wins, then first skip.
    pub fn all(items: impl IntoIterator<Item = Status>) -> Status {
        let mut skip = None;
        for s in items {
            match s {
                Status::Fail(_) => return s,
                Status::Skipped(_) if skip.is_none() => skip = Some(s),
                _ => {}
            }
        }
        skip.unwrap_or(Status::Pass)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail(d) => write!(f, "fail({})", d),
            Status::Skipped(d) => write!(f, "skipped({})", d),
        }
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub model: String,
    pub tag: String,
    pub check: String,
    pub order: usize,
    #[serde(flatten)]
    pub status: Status,
}

impl CheckRecord {
    pub fn new(model: impl fmt::Display, tag: impl fmt::Display, check: &str, order: usize, status: Status) -> Self {
        CheckRecord {
            model: model.to_string(),
            tag: tag.to_string(),
            check: check.to_string(),
            order,
            status,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = CheckRecord::new("0,1,0,1,0,0,0,1", "F1b", "kreweras-substitution", 20, Status::Pass);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"model":"0,1,0,1,0,0,0,1","tag":"F1b","check":"kreweras-substitution","order":20,"status":"pass"}"#
        );
        let f = CheckRecord::new("m", "F0", "c", 5, Status::skipped("irrational-scaling"));
        let back: CheckRecord = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn combine() {
        assert_eq!(Status::all([Status::Pass, Status::skipped("a"), Status::fail("b")]), Status::fail("b"));
        assert_eq!(Status::all([Status::Pass, Status::skipped("a")]), Status::skipped("a"));
        assert_eq!(Status::all([]), Status::Pass);
    }
}

//! Report rows shared by the analysis commands.

use std::fmt;

use serde::Serialize;

/// Outcome of comparing a predicted value against an observed one.
/// A mismatch is a finding about the formula, never an internal error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    NotApplicable,
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Match
        } else {
            Status::Mismatch
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::NotApplicable => "not-applicable",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub check: String,
    pub predicted: String,
    pub observed: String,
    pub status: Status,
}

impl Row {
    pub fn compare(check: impl Into<String>, predicted: impl ToString, observed: impl ToString) -> Row {
        let predicted = predicted.to_string();
        let observed = observed.to_string();
        let status = Status::from_bool(predicted == observed);
        Row {
            check: check.into(),
            predicted,
            observed,
            status,
        }
    }

    pub fn holds(check: impl Into<String>, ok: bool) -> Row {
        Row {
            check: check.into(),
            predicted: "true".into(),
            observed: ok.to_string(),
            status: Status::from_bool(ok),
        }
    }

    pub fn info(check: impl Into<String>, observed: impl ToString) -> Row {
        Row {
            check: check.into(),
            predicted: "-".into(),
            observed: observed.to_string(),
            status: Status::Info,
        }
    }

    pub fn not_applicable(check: impl Into<String>, why: impl ToString) -> Row {
        Row {
            check: check.into(),
            predicted: "-".into(),
            observed: why.to_string(),
            status: Status::NotApplicable,
        }
    }

    pub fn is_finding(&self) -> bool {
        self.status == Status::Mismatch
    }
}

/// Renders rows as aligned text, one per line.
pub fn render_rows(rows: &[Row]) -> String {
    let w = rows.iter().map(|r| r.check.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "{:<w$}  {:<14}  predicted={}  observed={}\n",
            r.check,
            r.status.to_string(),
            r.predicted,
            r.observed,
            w = w
        ));
    }
    out
}

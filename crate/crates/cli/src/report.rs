//! Command results in text and JSON form.

use std::fmt::Write;

/// Overall outcome, mapped to the exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    /// Some answer is unknown or not certified.
    Uncertified,
    /// A check failed.
    Failed,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Uncertified => "uncertified",
            Status::Failed => "failed",
        }
    }
}

/// Text and JSON renderings of one command.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub status: Status,
}

impl Report {
    pub fn new(json: serde_json::Value) -> Self {
        Report { text: String::new(), json, status: Status::Ok }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        writeln!(self.text, "{}", s.as_ref()).expect("writing to a string");
    }

    /// Raises the status to at least `s`.
    pub fn mark(&mut self, s: Status) {
        self.status = self.status.max(s);
    }
}

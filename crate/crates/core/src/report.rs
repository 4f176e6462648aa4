//! Verification reports shared by the check suites.

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub maxdeg: usize,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(suite: impl Into<String>, maxdeg: usize) -> Self {
        Report {
            suite: suite.into(),
            maxdeg,
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one comparison.
    pub fn check<T: PartialEq + ToString>(&mut self, input: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.checks += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                input: input(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Records a predicate, with the values shown on failure.
    pub fn expect(&mut self, input: impl FnOnce() -> String, ok: bool, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                input: input(),
                lhs: lhs(),
                rhs: rhs(),
            });
        }
    }

    /// Records a check that produced an error instead of a value.
    pub fn error(&mut self, input: String, err: impl ToString) {
        self.checks += 1;
        self.failures.push(Failure {
            input,
            lhs: format!("error: {}", err.to_string()),
            rhs: String::new(),
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

//! Named law suites. Each suite checks one identity or fixture over an
//! exhaustive sweep or a seeded random sample and reports every failure.

use std::fmt::{Debug, Display};

use crate::par;

mod concat;
mod cuts;
mod field;
mod partitions;
mod structures;

pub type Outcome = std::result::Result<(), String>;

/// Outcome of one suite run.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub samples: usize,
    pub failed: usize,
    /// The first few failure messages.
    pub failures: Vec<String>,
}

const KEPT_FAILURES: usize = 5;

impl Tally {
    pub fn merge(mut self, other: Tally) -> Tally {
        self.samples += other.samples;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(f);
            }
        }
        self
    }

    pub fn single(outcome: Outcome) -> Tally {
        sweep(&[()], |_| outcome.clone())
    }
}

/// Runs `f` on every item, in parallel when enabled.
pub fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Outcome + Sync + Send) -> Tally {
    let results = par::map(items, f);
    let mut t = Tally { samples: results.len(), ..Tally::default() };
    for r in results {
        if let Err(msg) = r {
            t.failed += 1;
            if t.failures.len() < KEPT_FAILURES {
                t.failures.push(msg);
            }
        }
    }
    t
}

pub(crate) fn expect_eq<T: PartialEq + Debug>(what: impl Display, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

pub(crate) fn expect(what: impl Display, cond: bool) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(format!("{what}: does not hold"))
    }
}

pub(crate) fn ok<T>(what: impl Display, r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

#[derive(Clone, Copy)]
pub struct Suite {
    pub name: &'static str,
    pub statement: &'static str,
    pub run: fn(u64) -> Tally,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: &'static str,
    pub statement: &'static str,
    pub tally: Tally,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.tally.failed == 0 && self.tally.samples > 0
    }
}

pub fn suites() -> Vec<Suite> {
    let mut out = Vec::new();
    out.extend(field::SUITES);
    out.extend(cuts::SUITES);
    out.extend(concat::SUITES);
    out.extend(structures::SUITES);
    out.extend(partitions::SUITES);
    out
}

pub fn find(name: &str) -> Option<Suite> {
    suites().into_iter().find(|s| s.name == name)
}

pub fn run(suite: &Suite, seed: u64) -> Report {
    Report { suite: suite.name, statement: suite.statement, tally: (suite.run)(seed) }
}

pub fn run_all(seed: u64) -> Vec<Report> {
    suites().iter().map(|s| run(s, seed)).collect()
}

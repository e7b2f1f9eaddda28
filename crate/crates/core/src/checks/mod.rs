//! Property suites shared by the command-line runner and the test targets.
//!
//! Every property is a pure function of its inputs and a seed, so reports
//! are reproducible.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poisson::PresentedPoissonAlgebra;

pub mod fock;
pub mod lierinehart;
pub mod poisson;
pub mod reduction;
pub mod repcount;

pub const DEFAULT_SEED: u64 = 1729;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub instances: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl PropertyResult {
    /// Runs `f`, which returns the instance count or a counterexample.
    pub fn run(name: impl Into<String>, f: impl FnOnce() -> std::result::Result<usize, (usize, String)>) -> Self {
        let name = name.into();
        match f() {
            Ok(instances) => PropertyResult { name, instances, passed: true, counterexample: None },
            Err((instances, ce)) => PropertyResult { name, instances, passed: false, counterexample: Some(ce) },
        }
    }
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        let plural = if self.instances == 1 { "" } else { "s" };
        write!(f, "[{status}] {} ({} instance{plural})", self.name, self.instances)?;
        if let Some(ce) = &self.counterexample {
            write!(f, "\n       counterexample: {ce}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn new(suite: Suite, properties: Vec<PropertyResult>) -> Self {
        SuiteReport { suite: suite.name().to_string(), passed: properties.iter().all(|p| p.passed), properties }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Poisson,
    LieRinehart,
    Reduction,
    Fock,
    Repcount,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Poisson, Suite::LieRinehart, Suite::Reduction, Suite::Fock, Suite::Repcount];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Poisson => "poisson",
            Suite::LieRinehart => "lierinehart",
            Suite::Reduction => "reduction",
            Suite::Fock => "fock",
            Suite::Repcount => "repcount",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s}")))
    }
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub seed: u64,
    /// Replaces the built-in algebras in the Poisson suite.
    pub algebra: Option<PresentedPoissonAlgebra>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { seed: DEFAULT_SEED, algebra: None }
    }
}

pub fn run_suite(suite: Suite, opts: &CheckOptions) -> SuiteReport {
    let props = match suite {
        Suite::Poisson => poisson::suite(opts),
        Suite::LieRinehart => lierinehart::suite(opts.seed),
        Suite::Reduction => reduction::suite(opts.seed),
        Suite::Fock => fock::suite(opts.seed),
        Suite::Repcount => repcount::suite(opts.seed),
    };
    SuiteReport::new(suite, props)
}

/// Shorthand for a failing instance inside a property closure.
pub(crate) fn fail<T>(n: usize, msg: impl Into<String>) -> std::result::Result<T, (usize, String)> {
    Err((n, msg.into()))
}

//! Theorem suites over enumerated instances, run on a worker pool and
//! reported one row per check.

mod report;
mod suites;

use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use report::{emit_report, render_report, write_report, CheckReport, Format};
pub use suites::{brute_force_southwest_count, Suite};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::groebner::MonomialOrder;

/// Deliberate corruption used to check that the harness reports failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Drop the last generator of the ideal under test.
    DropGenerator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Largest `n`; every `1 <= k <= n` is run. `None` uses the suite default.
    pub max_n: Option<usize>,
    /// Allow the expensive sweeps beyond the default limits.
    pub exhaustive: bool,
    /// Seed for extra random instances where a suite samples.
    pub sample: Option<u64>,
    /// Worker threads; `None` uses the available parallelism.
    pub workers: Option<usize>,
    pub order: MonomialOrder,
    /// Prime for the finite field counts; default is the smallest prime above `n |A|`.
    pub prime: Option<u64>,
    /// Record elapsed milliseconds (reports are then no longer byte-stable).
    pub timings: bool,
    pub fault: Option<Fault>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_n: None,
            exhaustive: false,
            sample: None,
            workers: None,
            order: MonomialOrder::Grevlex,
            prime: None,
            timings: false,
            fault: None,
        }
    }
}

impl RunConfig {
    pub fn with_n(n: usize) -> RunConfig {
        RunConfig { max_n: Some(n), ..RunConfig::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.max_n == Some(0) {
            return Err(Error::Precondition("n must be positive".into()));
        }
        if self.workers == Some(0) {
            return Err(Error::Precondition("worker count must be positive".into()));
        }
        if let Some(p) = self.prime {
            if !crate::arrangement::lattice::is_prime(p) {
                return Err(Error::Precondition(format!("{p} is not prime")));
            }
        }
        Ok(())
    }
}

/// A single check: `(expected, actual)` computed on demand.
pub(crate) type CheckFn = Box<dyn Fn() -> Result<(String, String)> + Send + Sync>;

pub(crate) struct Task {
    pub check: &'static str,
    pub n: usize,
    pub instance: String,
    pub run: CheckFn,
}

fn execute(task: &Task, timings: bool) -> CheckReport {
    let start = Instant::now();
    let outcome = (task.run)();
    let ms = if timings { start.elapsed().as_millis() as u64 } else { 0 };
    let (expected, actual) = match outcome {
        Ok(pair) => pair,
        Err(e) => ("no error".to_string(), format!("error: {e}")),
    };
    let mut r = CheckReport::new(task.check, task.n, task.instance.clone(), expected, actual);
    r.ms = ms;
    r
}

/// Runs a suite. The report order is the instance enumeration order, which
/// does not depend on the worker count.
pub fn run_suite(name: &str, config: &RunConfig) -> Result<Vec<CheckReport>> {
    let suite = Suite::from_str(name)?;
    config.validate()?;
    let tasks = suite.tasks(config)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = config.workers {
        builder = builder.num_threads(w);
    }
    let pool = builder.build().map_err(|e| Error::Io(e.to_string()))?;
    let timings = config.timings;
    Ok(pool.install(|| tasks.par_iter().map(|t| execute(t, timings)).collect()))
}

/// All southwest arrangements in `K^n`, optionally only the essential ones.
pub fn enumerate_southwest(n: usize, essential_only: bool) -> Result<Vec<Arrangement>> {
    use crate::arrangement::HyperplaneSet;
    let all = crate::arrangement::enumerate_southwest(n)?;
    Ok(all.into_iter().filter(|a| !essential_only || a.is_essential()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", &RunConfig::default()), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let reports = run_suite(s.name(), &RunConfig::with_n(2)).unwrap();
            assert!(!reports.is_empty(), "{}", s.name());
            assert!(reports.iter().all(|r| r.pass), "{}: {:?}", s.name(), reports.iter().find(|r| !r.pass));
        }
    }

    #[test]
    fn fault_is_reported() {
        let cfg = RunConfig { fault: Some(Fault::DropGenerator), ..RunConfig::with_n(2) };
        let reports = run_suite("sagan-swanson", &cfg).unwrap();
        assert!(reports.iter().any(|r| !r.pass && r.expected != r.actual));
    }
}

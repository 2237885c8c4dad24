//! JSON reports. Everything except `timing` is a pure function of the run
//! configuration.

use std::collections::BTreeMap;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use relspin::{Backend, GammaKind};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub status: Status,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub trials: usize,
    /// Trials that broke an inequality rather than exceeding the tolerance.
    pub violations: usize,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub started_unix_ms: u128,
    pub wall_time_ms: u128,
}

impl Timing {
    pub fn new(started: SystemTime, elapsed: Duration) -> Self {
        Self {
            started_unix_ms: started
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_millis())
                .unwrap_or(0),
            wall_time_ms: elapsed.as_millis(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub backend: Backend,
    pub seed: u64,
    pub trials: usize,
    pub tolerance: f64,
    pub gammas: GammaKind,
    pub checks: BTreeMap<String, CheckResult>,
    pub passed: bool,
    pub timing: Option<Timing>,
}

impl Report {
    pub fn new(
        backend: Backend,
        seed: u64,
        trials: usize,
        tolerance: f64,
        gammas: GammaKind,
        checks: BTreeMap<String, CheckResult>,
    ) -> Self {
        let passed = checks.values().all(CheckResult::passed);
        Self {
            schema: SCHEMA_VERSION,
            backend,
            seed,
            trials,
            tolerance,
            gammas,
            checks,
            passed,
            timing: None,
        }
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, c)| !c.passed())
            .map(|(name, _)| name.as_str())
            .collect()
    }

    /// The report with `timing` cleared, for comparing runs.
    pub fn without_timing(&self) -> Self {
        Self {
            timing: None,
            ..self.clone()
        }
    }
}

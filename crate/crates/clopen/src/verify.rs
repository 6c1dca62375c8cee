//! Verdicts and verification scope.
//!
//! Every checker in this crate reports not just *whether* a property holds
//! but *how hard it looked*. Exhaustive runs cover a stated number of cases
//! and their verdicts are proofs over the finite search space. Sampled runs
//! are seeded and reproducible, and a passing verdict means only that no
//! counterexample was found within the configured number of trials.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Default RNG seed for sampled verification.
pub const DEFAULT_SEED: u64 = 0;

/// Default number of trials for sampled verification.
pub const DEFAULT_TRIALS: u64 = 10_000;

/// Controls how much work sampled checks perform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Seed for the deterministic RNG behind sampled checks.
    pub seed: u64,
    /// Number of random trials a sampled check runs.
    pub trials: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
        }
    }
}

impl VerifyConfig {
    /// Config with a specific seed and the default trial count.
    pub fn seeded(seed: u64) -> Self {
        VerifyConfig {
            seed,
            ..VerifyConfig::default()
        }
    }
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum VerifyMode {
    /// Every case in the stated search space was checked.
    Exhaustive {
        /// Number of cases covered.
        checked: u64,
    },
    /// A seeded random sample of the search space was checked.
    Sampled {
        /// Seed that reproduces the run.
        seed: u64,
        /// Number of trials performed.
        trials: u64,
    },
}

impl VerifyMode {
    /// True when the verdict covers the whole search space.
    pub fn is_exhaustive(&self) -> bool {
        matches!(self, VerifyMode::Exhaustive { .. })
    }
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyMode::Exhaustive { checked } => {
                write!(f, "exhaustive over {checked} cases")
            }
            VerifyMode::Sampled { seed, trials } => {
                write!(f, "sampled, seed {seed}, {trials} trials")
            }
        }
    }
}

/// Outcome of checking one property, with a witness on failure.
///
/// `holds == true` under a sampled mode means no counterexample was found;
/// it is not a proof. Under an exhaustive mode it is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict<W> {
    /// Whether the property held over the covered cases.
    pub holds: bool,
    /// A counterexample when `holds` is false. Exhaustive checks produce
    /// the least witness in canonical enumeration order, so reruns agree.
    pub witness: Option<W>,
    /// Scope of the check.
    pub mode: VerifyMode,
}

impl<W> Verdict<W> {
    /// Passing verdict.
    pub fn pass(mode: VerifyMode) -> Self {
        Verdict {
            holds: true,
            witness: None,
            mode,
        }
    }

    /// Failing verdict carrying its witness.
    pub fn fail(witness: W, mode: VerifyMode) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
            mode,
        }
    }

    /// Map the witness type.
    pub fn map_witness<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        Verdict {
            holds: self.holds,
            witness: self.witness.map(f),
            mode: self.mode,
        }
    }
}

impl<W: fmt::Display> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            if self.mode.is_exhaustive() {
                write!(f, "holds ({})", self.mode)
            } else {
                write!(f, "no counterexample found ({})", self.mode)
            }
        } else {
            match &self.witness {
                Some(w) => write!(f, "fails ({}): {}", self.mode, w),
                None => write!(f, "fails ({})", self.mode),
            }
        }
    }
}

//! The choice rules and the finite decision problems they rank.
//!
//! Acts are evaluated as [`Prospect`]s: finite distributions over outcomes
//! that carry a deontic weight (duty component, never positive) and a value
//! (consequentialist component). The headline rule rounds expected deontic
//! weight to a grain, compares lexicographically, and breaks ties with
//! unrounded expected value. Expected-value maximization and
//! probability-discounting are carried as rival baselines.
//!
//! Everything here is pure and deterministic over immutable inputs.

mod ledger;
mod problem;
mod rule;

pub use ledger::{LedgerDecision, RiskLedger};
pub use problem::{Act, DecisionProblem, DeonticWeight, Outcome, Prospect, State, Value};
pub use rule::{choose, relv_compare, round_to_grain, ActScore, Choice, ChoiceRule, Preference};

use thiserror::Error;

/// Validation and evaluation failures for engine inputs.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum EngineError {
    #[error("deontic weight must be <= 0, got {0}")]
    PositiveDeonticWeight(String),
    #[error("probability must be >= 0, got {0}")]
    NegativeProbability(String),
    #[error("prospect probabilities must sum to exactly 1, got {0}")]
    ProbabilityMassNotOne(String),
    #[error("prospect has no branches with positive probability")]
    EmptyProspect,
    #[error("decision problem has no states")]
    NoStates,
    #[error("state priors must sum to exactly 1, got {0}")]
    PriorMassNotOne(String),
    #[error("duplicate state label {0:?}")]
    DuplicateState(String),
    #[error("duplicate act label {0:?}")]
    DuplicateAct(String),
    #[error("act {act:?} defines {found} outcomes for {expected} states")]
    ActArityMismatch {
        act: String,
        expected: usize,
        found: usize,
    },
    #[error("decision problem has no acts")]
    NoActs,
    #[error("rounding grain must be > 0, got {0}")]
    NonPositiveGrain(String),
    #[error("discount threshold must lie strictly between 0 and 1, got {0}")]
    ThresholdOutOfRange(String),
    #[error("discounting zeroed every state prior (threshold {0})")]
    DegenerateDiscount(String),
    #[error("conditioning event is empty")]
    EmptyEvent,
    #[error("conditioning event names unknown state {0:?}")]
    UnknownState(String),
    #[error("conditioning event has zero prior probability")]
    ZeroProbabilityEvent,
    #[error("risk ledger only applies to the rounded lexicographic rule")]
    LedgerRequiresRelv,
}

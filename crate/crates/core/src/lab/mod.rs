//! Brute-force verification of the formal claims about the choice rules:
//! sure-thing-principle behavior, agglomeration of small risks, and
//! money-pump exploitability, on exhaustively enumerable instances.

mod agglomeration;
mod compare;
mod pump;
mod stp;

pub use agglomeration::{check_weak_agglomeration, AgglomerationReport};
pub use compare::{compare_rules, RuleComparison, RuleRow};
pub use pump::{
    money_pump_search, path_dominated, simulate_choices, OfferTree, PathTotals, PumpReport,
    PumpWitness, SimulatedRun, MAX_PUMP_TREES,
};
pub use stp::{check_stp, search_stp_violations, GridBounds, StpReport, StpViolation, StpWitness};

use crate::engine::EngineError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LabError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("enumeration bounds are empty: {0}")]
    EmptyBounds(String),
    #[error("grid priors must lie strictly between 0 and 1, got {0}")]
    PriorOutOfRange(String),
    #[error("agglomeration series needs n >= 2, got {0}")]
    SeriesTooShort(u32),
    #[error("agglomeration check requires the rounding rule")]
    AgglomerationRequiresRelv,
    #[error("pump search depth capped at 4, got {0}")]
    DepthTooLarge(u32),
    #[error("pump menu is empty")]
    EmptyMenu,
    #[error("pump search space has {trees} trees, cap is {cap}")]
    SearchSpaceTooLarge { trees: u128, cap: u128 },
}

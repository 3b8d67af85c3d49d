//! Per-episode accumulator of risked deontic weight.
//!
//! A sequence of acts, each individually below the rounding grain, can add
//! up to the risk profile of a single forbidden act. The ledger closes that
//! gap: an act is permitted only while the cumulative expected deontic
//! weight stays inside the grain boundary it started the episode in.

use crate::engine::{ChoiceRule, EngineError, Prospect};
use crate::engine::rule::round_to_grain;
use crate::scalar::Scalar;

/// Total expected deontic weight risked so far this episode. Non-increasing
/// while the episode runs; reset at episode start.
#[derive(Debug, Clone, PartialEq)]
pub struct RiskLedger<S> {
    accumulated: S,
}

/// Outcome of asking the ledger about one more act.
#[derive(Debug, Clone, PartialEq)]
pub struct LedgerDecision<S> {
    pub permitted: bool,
    /// The ledger after the act: charged with the act's expected deontic
    /// weight when permitted, unchanged when refused.
    pub ledger: RiskLedger<S>,
}

impl<S: Scalar> RiskLedger<S> {
    pub fn new() -> Self {
        Self { accumulated: S::zero() }
    }

    pub fn accumulated(&self) -> &S {
        &self.accumulated
    }

    /// Permit `prospect` iff taking it would not move the cumulative risk
    /// across a grain boundary. Requires the rounding rule.
    pub fn permits(
        &self,
        prospect: &Prospect<S>,
        rule: &ChoiceRule<S>,
    ) -> Result<LedgerDecision<S>, EngineError> {
        let ChoiceRule::Relv { grain } = rule else {
            return Err(EngineError::LedgerRequiresRelv);
        };
        self.permits_edw(&prospect.expected_deontic_weight(), grain)
    }

    /// Same check with a precomputed expected deontic weight.
    pub fn permits_edw(&self, edw: &S, grain: &S) -> Result<LedgerDecision<S>, EngineError> {
        let before = round_to_grain(&self.accumulated, grain)?;
        let charged = self.accumulated.clone() + edw.clone();
        let after = round_to_grain(&charged, grain)?;
        if before == after {
            Ok(LedgerDecision {
                permitted: true,
                ledger: RiskLedger { accumulated: charged },
            })
        } else {
            Ok(LedgerDecision { permitted: false, ledger: self.clone() })
        }
    }
}

impl<S: Scalar> Default for RiskLedger<S> {
    fn default() -> Self {
        Self::new()
    }
}

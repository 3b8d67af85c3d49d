//! Weak Agglomeration: if each act in a series is permitted, performing the
//! whole series should be too. Per-act rounding permits a certain violation
//! split into n sub-grain risks; the diachronic ledger closes the loophole.

use crate::engine::{ChoiceRule, DeonticWeight, Outcome, Prospect, RiskLedger};
use crate::lab::LabError;
use crate::scalar::Scalar;

/// Permit flags for a split-risk series, with and without the ledger.
#[derive(Debug, Clone, PartialEq)]
pub struct AgglomerationReport<S> {
    /// Act i carries a 1/n chance of the unit violation.
    pub series: Vec<Prospect<S>>,
    /// Fresh-ledger verdict for each act on its own.
    pub synchronic_verdicts: Vec<bool>,
    /// Verdicts when the ledger carries risk forward through the series.
    pub diachronic_verdicts: Vec<bool>,
    /// Verdict for the agglomerated act: the certain unit violation.
    pub combined_verdict: bool,
}

impl<S> AgglomerationReport<S> {
    /// The synchronic rule breaks Weak Agglomeration iff it permits every
    /// act separately while refusing the combination.
    pub fn synchronic_violates(&self) -> bool {
        self.synchronic_verdicts.iter().all(|&v| v) && !self.combined_verdict
    }

    pub fn diachronic_refuses_any(&self) -> bool {
        self.diachronic_verdicts.iter().any(|&v| !v)
    }
}

/// Split a certain `unit_violation` into `n` acts of probability 1/n each
/// and record how the rounding rule treats the series.
pub fn check_weak_agglomeration<S: Scalar>(
    n: u32,
    unit_violation: &DeonticWeight<S>,
    rule: &ChoiceRule<S>,
) -> Result<AgglomerationReport<S>, LabError> {
    if n < 2 {
        return Err(LabError::SeriesTooShort(n));
    }
    if !matches!(rule, ChoiceRule::Relv { .. }) {
        return Err(LabError::AgglomerationRequiresRelv);
    }
    rule.validate().map_err(LabError::Engine)?;

    let w = unit_violation.magnitude().clone();
    // The violation outcome carries its weight as (negative) value too,
    // keeping the value/deontic covariation norm.
    let violation = Outcome::new("violation", w.clone(), w.clone()).map_err(LabError::Engine)?;
    let nothing = Outcome::harmless("nothing", S::zero());

    let p = S::one() / S::from_int(i64::from(n));
    let split = Prospect::new(vec![
        (p.clone(), violation.clone()),
        (S::one() - p, nothing),
    ])
    .map_err(LabError::Engine)?;
    let series = vec![split; n as usize];
    let combined = Prospect::certain(violation);

    let fresh = RiskLedger::new();
    let mut synchronic = Vec::with_capacity(series.len());
    for act in &series {
        synchronic.push(fresh.permits(act, rule).map_err(LabError::Engine)?.permitted);
    }
    let combined_verdict = fresh.permits(&combined, rule).map_err(LabError::Engine)?.permitted;

    let mut ledger = RiskLedger::new();
    let mut diachronic = Vec::with_capacity(series.len());
    for act in &series {
        let decision = ledger.permits(act, rule).map_err(LabError::Engine)?;
        diachronic.push(decision.permitted);
        ledger = decision.ledger;
    }

    Ok(AgglomerationReport {
        series,
        synchronic_verdicts: synchronic,
        diachronic_verdicts: diachronic,
        combined_verdict,
    })
}

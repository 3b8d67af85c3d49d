//! The rounded lexicographic rule and its rivals.

use std::cmp::Ordering;

use crate::engine::{DecisionProblem, EngineError, Prospect};
use crate::scalar::{cmp, Scalar};

/// Selection among the implemented choice rules.
///
/// * `Relv` — round expected deontic weight to the nearest multiple of
///   `grain`, maximize the rounded weight, break ties with unrounded
///   expected value.
/// * `Ev` — plain expected-value maximization.
/// * `Discount` — treat state priors below `threshold` as zero; if any act
///   still risks a violation, take the smallest residual violation
///   probability (ties by expected value), else maximize expected value.
#[derive(Debug, Clone, PartialEq)]
pub enum ChoiceRule<S> {
    Relv { grain: S },
    Ev,
    Discount { threshold: S },
}

impl<S: Scalar> ChoiceRule<S> {
    pub fn relv(grain: S) -> Result<Self, EngineError> {
        if grain <= S::zero() {
            return Err(EngineError::NonPositiveGrain(grain.to_string()));
        }
        Ok(Self::Relv { grain })
    }

    pub fn discount(threshold: S) -> Result<Self, EngineError> {
        if threshold <= S::zero() || threshold >= S::one() {
            return Err(EngineError::ThresholdOutOfRange(threshold.to_string()));
        }
        Ok(Self::Discount { threshold })
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        match self {
            Self::Relv { grain } if *grain <= S::zero() => {
                Err(EngineError::NonPositiveGrain(grain.to_string()))
            }
            Self::Discount { threshold }
                if *threshold <= S::zero() || *threshold >= S::one() =>
            {
                Err(EngineError::ThresholdOutOfRange(threshold.to_string()))
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Relv { .. } => "relv",
            Self::Ev => "ev",
            Self::Discount { .. } => "discount",
        }
    }
}

impl<S: Scalar> std::fmt::Display for ChoiceRule<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Relv { grain } => write!(f, "relv(grain={grain})"),
            Self::Ev => write!(f, "ev"),
            Self::Discount { threshold } => write!(f, "discount(threshold={threshold})"),
        }
    }
}

/// `grain` times the nearest integer to `x / grain`; exact half-grain ties
/// round away from zero, so a borderline risk counts as a violation.
pub fn round_to_grain<S: Scalar>(x: &S, grain: &S) -> Result<S, EngineError> {
    if *grain <= S::zero() {
        return Err(EngineError::NonPositiveGrain(grain.to_string()));
    }
    Ok((x.clone() / grain.clone()).round_half_away() * grain.clone())
}

/// Which of two prospects the rounded lexicographic rule prefers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preference {
    First,
    Second,
    Tie,
}

/// Lexicographic comparison: rounded expected deontic weight first (closer
/// to zero is better), unrounded expected value second.
pub fn relv_compare<S: Scalar>(
    a: &Prospect<S>,
    b: &Prospect<S>,
    grain: &S,
) -> Result<Preference, EngineError> {
    let ra = round_to_grain(&a.expected_deontic_weight(), grain)?;
    let rb = round_to_grain(&b.expected_deontic_weight(), grain)?;
    let ord = match cmp(&ra, &rb) {
        Ordering::Equal => cmp(&a.expected_value(), &b.expected_value()),
        other => other,
    };
    Ok(match ord {
        Ordering::Greater => Preference::First,
        Ordering::Less => Preference::Second,
        Ordering::Equal => Preference::Tie,
    })
}

/// Per-act figures backing a [`Choice`] ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct ActScore<S> {
    pub act: String,
    pub edw: S,
    /// Populated for the rounding rule only.
    pub rounded_edw: Option<S>,
    pub ev: S,
    /// Residual violation probability, populated for discounting only.
    pub violation_prob: Option<S>,
}

/// The prescription plus the full ranking that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Choice<S> {
    pub best: String,
    pub ranking: Vec<ActScore<S>>,
}

/// Rank the problem's acts under `rule` and return the prescribed act.
///
/// Ties at the top are broken by the lexicographically smallest act label,
/// so the result is a pure function of its inputs.
pub fn choose<S: Scalar>(
    problem: &DecisionProblem<S>,
    rule: &ChoiceRule<S>,
) -> Result<Choice<S>, EngineError> {
    rule.validate()?;
    if problem.acts().is_empty() {
        return Err(EngineError::NoActs);
    }
    match rule {
        ChoiceRule::Relv { grain } => {
            let mut scores = score_acts(problem, Some(grain))?;
            scores.sort_by(|x, y| {
                cmp(y.rounded_edw.as_ref().unwrap(), x.rounded_edw.as_ref().unwrap())
                    .then_with(|| cmp(&y.ev, &x.ev))
                    .then_with(|| x.act.cmp(&y.act))
            });
            Ok(Choice { best: scores[0].act.clone(), ranking: scores })
        }
        ChoiceRule::Ev => {
            let mut scores = score_acts(problem, None)?;
            scores.sort_by(|x, y| cmp(&y.ev, &x.ev).then_with(|| x.act.cmp(&y.act)));
            Ok(Choice { best: scores[0].act.clone(), ranking: scores })
        }
        ChoiceRule::Discount { threshold } => {
            let kept: Vec<&str> = problem
                .states()
                .iter()
                .filter(|s| s.prior >= *threshold)
                .map(|s| s.label.as_str())
                .collect();
            if kept.is_empty() {
                return Err(EngineError::DegenerateDiscount(threshold.to_string()));
            }
            let reduced = problem.condition(&kept)?;
            let mut scores = Vec::with_capacity(reduced.acts().len());
            for act in reduced.acts() {
                let p = reduced.prospect(act);
                scores.push(ActScore {
                    act: act.label.clone(),
                    edw: p.expected_deontic_weight(),
                    rounded_edw: None,
                    ev: p.expected_value(),
                    violation_prob: Some(p.violation_probability()),
                });
            }
            scores.sort_by(|x, y| {
                cmp(x.violation_prob.as_ref().unwrap(), y.violation_prob.as_ref().unwrap())
                    .then_with(|| cmp(&y.ev, &x.ev))
                    .then_with(|| x.act.cmp(&y.act))
            });
            Ok(Choice { best: scores[0].act.clone(), ranking: scores })
        }
    }
}

fn score_acts<S: Scalar>(
    problem: &DecisionProblem<S>,
    grain: Option<&S>,
) -> Result<Vec<ActScore<S>>, EngineError> {
    let mut scores = Vec::with_capacity(problem.acts().len());
    for act in problem.acts() {
        let p = problem.prospect(act);
        let edw = p.expected_deontic_weight();
        let rounded = match grain {
            Some(g) => Some(round_to_grain(&edw, g)?),
            None => None,
        };
        scores.push(ActScore {
            act: act.label.clone(),
            edw,
            rounded_edw: rounded,
            ev: p.expected_value(),
            violation_prob: None,
        });
    }
    Ok(scores)
}

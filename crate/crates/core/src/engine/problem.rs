//! Outcomes, prospects, and act-by-state decision problems.

use crate::engine::EngineError;
use crate::scalar::Scalar;

/// Strength of the duty-based reasons in an outcome. Violations are
/// negative; fulfilment contributes exactly zero. Positive weights are not
/// constructible. Weights add across independent violations.
#[derive(Debug, Clone, PartialEq)]
pub struct DeonticWeight<S>(S);

impl<S: Scalar> DeonticWeight<S> {
    pub fn new(magnitude: S) -> Result<Self, EngineError> {
        if magnitude > S::zero() {
            return Err(EngineError::PositiveDeonticWeight(magnitude.to_string()));
        }
        Ok(Self(magnitude))
    }

    pub fn none() -> Self {
        Self(S::zero())
    }

    pub fn magnitude(&self) -> &S {
        &self.0
    }

    pub fn is_violation(&self) -> bool {
        self.0 < S::zero()
    }
}

/// Consequentialist value of an outcome; unbounded in either direction.
#[derive(Debug, Clone, PartialEq)]
pub struct Value<S>(S);

impl<S: Scalar> Value<S> {
    pub fn new(magnitude: S) -> Self {
        Self(magnitude)
    }

    pub fn magnitude(&self) -> &S {
        &self.0
    }
}

/// A terminal result: the two components of an act's choiceworthiness.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome<S> {
    label: String,
    deontic: DeonticWeight<S>,
    value: Value<S>,
}

impl<S: Scalar> Outcome<S> {
    pub fn new(
        label: impl Into<String>,
        deontic: S,
        value: S,
    ) -> Result<Self, EngineError> {
        Ok(Self {
            label: label.into(),
            deontic: DeonticWeight::new(deontic)?,
            value: Value::new(value),
        })
    }

    /// An outcome that violates no duty.
    pub fn harmless(label: impl Into<String>, value: S) -> Self {
        Self {
            label: label.into(),
            deontic: DeonticWeight::none(),
            value: Value::new(value),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn deontic(&self) -> &S {
        self.deontic.magnitude()
    }

    pub fn value(&self) -> &S {
        self.value.magnitude()
    }

    pub fn is_violation(&self) -> bool {
        self.deontic.is_violation()
    }
}

/// A finite probability distribution over outcomes; the unit of evaluation
/// for an act. Probabilities must sum to exactly one — no tolerance — so
/// instantiations over floats must supply exactly representable masses.
#[derive(Debug, Clone, PartialEq)]
pub struct Prospect<S> {
    branches: Vec<(S, Outcome<S>)>,
}

impl<S: Scalar> Prospect<S> {
    /// Validates and normalizes: zero-probability branches are permitted in
    /// the input but pruned here.
    pub fn new(branches: Vec<(S, Outcome<S>)>) -> Result<Self, EngineError> {
        let mut total = S::zero();
        for (p, _) in &branches {
            if *p < S::zero() {
                return Err(EngineError::NegativeProbability(p.to_string()));
            }
            total = total + p.clone();
        }
        if total != S::one() {
            return Err(EngineError::ProbabilityMassNotOne(total.to_string()));
        }
        let branches: Vec<_> = branches
            .into_iter()
            .filter(|(p, _)| !p.is_zero())
            .collect();
        if branches.is_empty() {
            return Err(EngineError::EmptyProspect);
        }
        Ok(Self { branches })
    }

    /// Degenerate prospect: `outcome` with probability one.
    pub fn certain(outcome: Outcome<S>) -> Self {
        Self {
            branches: vec![(S::one(), outcome)],
        }
    }

    pub fn branches(&self) -> &[(S, Outcome<S>)] {
        &self.branches
    }

    /// Probability-weighted sum of outcome values, exact.
    pub fn expected_value(&self) -> S {
        self.branches
            .iter()
            .fold(S::zero(), |acc, (p, o)| acc + p.clone() * o.value().clone())
    }

    /// Probability-weighted sum of deontic weights, exact. Always <= 0.
    pub fn expected_deontic_weight(&self) -> S {
        self.branches
            .iter()
            .fold(S::zero(), |acc, (p, o)| acc + p.clone() * o.deontic().clone())
    }

    /// Total probability of landing on a duty violation.
    pub fn violation_probability(&self) -> S {
        self.branches
            .iter()
            .filter(|(_, o)| o.is_violation())
            .fold(S::zero(), |acc, (p, _)| acc + p.clone())
    }
}

/// A possible world with its prior.
#[derive(Debug, Clone, PartialEq)]
pub struct State<S> {
    pub label: String,
    pub prior: S,
}

/// One row of the act-by-state matrix: `outcomes[i]` obtains in state `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Act<S> {
    pub label: String,
    pub outcomes: Vec<Outcome<S>>,
}

/// A finite act-by-state decision matrix with exact state priors.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem<S> {
    states: Vec<State<S>>,
    acts: Vec<Act<S>>,
}

impl<S: Scalar> DecisionProblem<S> {
    pub fn new(states: Vec<State<S>>, acts: Vec<Act<S>>) -> Result<Self, EngineError> {
        if states.is_empty() {
            return Err(EngineError::NoStates);
        }
        let mut total = S::zero();
        for (i, s) in states.iter().enumerate() {
            if s.prior < S::zero() {
                return Err(EngineError::NegativeProbability(s.prior.to_string()));
            }
            if states[..i].iter().any(|t| t.label == s.label) {
                return Err(EngineError::DuplicateState(s.label.clone()));
            }
            total = total + s.prior.clone();
        }
        if total != S::one() {
            return Err(EngineError::PriorMassNotOne(total.to_string()));
        }
        for (i, a) in acts.iter().enumerate() {
            if a.outcomes.len() != states.len() {
                return Err(EngineError::ActArityMismatch {
                    act: a.label.clone(),
                    expected: states.len(),
                    found: a.outcomes.len(),
                });
            }
            if acts[..i].iter().any(|b| b.label == a.label) {
                return Err(EngineError::DuplicateAct(a.label.clone()));
            }
        }
        Ok(Self { states, acts })
    }

    pub fn states(&self) -> &[State<S>] {
        &self.states
    }

    pub fn acts(&self) -> &[Act<S>] {
        &self.acts
    }

    pub fn act(&self, label: &str) -> Option<&Act<S>> {
        self.acts.iter().find(|a| a.label == label)
    }

    /// The prospect an act induces: its outcomes marginalized over the
    /// state priors.
    pub fn prospect(&self, act: &Act<S>) -> Prospect<S> {
        let branches = self
            .states
            .iter()
            .zip(&act.outcomes)
            .map(|(s, o)| (s.prior.clone(), o.clone()))
            .collect();
        Prospect::new(branches).expect("problem invariants guarantee a valid prospect")
    }

    /// Restrict to the named states and renormalize the priors exactly.
    pub fn condition(&self, event: &[&str]) -> Result<Self, EngineError> {
        if event.is_empty() {
            return Err(EngineError::EmptyEvent);
        }
        for label in event {
            if !self.states.iter().any(|s| s.label == *label) {
                return Err(EngineError::UnknownState((*label).to_string()));
            }
        }
        let keep: Vec<usize> = self
            .states
            .iter()
            .enumerate()
            .filter(|(_, s)| event.contains(&s.label.as_str()))
            .map(|(i, _)| i)
            .collect();
        let mass = keep
            .iter()
            .fold(S::zero(), |acc, &i| acc + self.states[i].prior.clone());
        if mass.is_zero() {
            return Err(EngineError::ZeroProbabilityEvent);
        }
        let states = keep
            .iter()
            .map(|&i| State {
                label: self.states[i].label.clone(),
                prior: self.states[i].prior.clone() / mass.clone(),
            })
            .collect();
        let acts = self
            .acts
            .iter()
            .map(|a| Act {
                label: a.label.clone(),
                outcomes: keep.iter().map(|&i| a.outcomes[i].clone()).collect(),
            })
            .collect();
        Self::new(states, acts)
    }

    /// Covariation lint: within an act, an outcome that violates more should
    /// not be valued more than one that violates less. Compound outcomes can
    /// trip this legitimately, which is why it warns instead of failing.
    pub fn lint(&self) -> Vec<String> {
        let mut warnings = Vec::new();
        for act in &self.acts {
            for a in &act.outcomes {
                for b in &act.outcomes {
                    if a.deontic() < b.deontic() && a.value() > b.value() {
                        warnings.push(format!(
                            "act {:?}: outcome {:?} violates more than {:?} but carries more value",
                            act.label,
                            a.label(),
                            b.label()
                        ));
                    }
                }
            }
        }
        warnings.sort();
        warnings.dedup();
        warnings
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use crate::engine::EngineError;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn kill() -> Outcome<Rational> {
        Outcome::new("kill", rat(-100, 1), rat(-1, 1)).unwrap()
    }

    fn scare() -> Outcome<Rational> {
        Outcome::new("scare", rat(0, 1), rat(-1, 100)).unwrap()
    }

    /// Pull prospect of the revolver matrix, built by hand.
    fn pull() -> Prospect<Rational> {
        Prospect::new(vec![(rat(1, 100), kill()), (rat(99, 100), scare())]).unwrap()
    }

    #[test]
    fn expected_value_of_pull() {
        // 1/100 * -1 + 99/100 * -1/100 = -199/10000
        assert_eq!(pull().expected_value(), rat(-199, 10000));
    }

    #[test]
    fn expected_value_degenerate_and_symmetric() {
        let nothing = Prospect::certain(Outcome::harmless("nothing", rat(0, 1)));
        assert_eq!(nothing.expected_value(), rat(0, 1));

        let sym = Prospect::new(vec![
            (rat(1, 2), Outcome::harmless("up", rat(3, 1))),
            (rat(1, 2), Outcome::harmless("down", rat(-3, 1))),
        ])
        .unwrap();
        assert_eq!(sym.expected_value(), rat(0, 1));
    }

    #[test]
    fn expected_deontic_weight_of_pull() {
        assert_eq!(pull().expected_deontic_weight(), rat(-1, 1));
    }

    #[test]
    fn expected_deontic_weight_all_zero() {
        let p = Prospect::new(vec![
            (rat(1, 4), Outcome::harmless("a", rat(7, 1))),
            (rat(3, 4), Outcome::harmless("b", rat(-2, 1))),
        ])
        .unwrap();
        assert_eq!(p.expected_deontic_weight(), rat(0, 1));
    }

    #[test]
    fn deontic_weight_is_linear_across_independent_violations() {
        // Two independent 1/100 chances of a -100 killing on one act.
        let p = rat(1, 100);
        let q = rat(99, 100);
        let double = Outcome::new("kill both", rat(-200, 1), rat(-2, 1)).unwrap();
        let compound = Prospect::new(vec![
            (p.clone() * p.clone(), double),
            (p.clone() * q.clone(), kill()),
            (q.clone() * p.clone(), kill()),
            (q.clone() * q.clone(), Outcome::harmless("neither", rat(0, 1))),
        ])
        .unwrap();
        assert_eq!(compound.expected_deontic_weight(), rat(-2, 1));
    }

    #[test]
    fn prospect_rejects_bad_mass() {
        let err = Prospect::new(vec![(rat(1, 2), kill())]).unwrap_err();
        assert_eq!(err, EngineError::ProbabilityMassNotOne("1/2".into()));

        let err = Prospect::new(vec![(rat(-1, 2), kill()), (rat(3, 2), scare())]).unwrap_err();
        assert!(matches!(err, EngineError::NegativeProbability(_)));
    }

    #[test]
    fn prospect_prunes_zero_branches() {
        let p = Prospect::new(vec![
            (rat(0, 1), kill()),
            (rat(1, 1), scare()),
        ])
        .unwrap();
        assert_eq!(p.branches().len(), 1);
        assert_eq!(p.branches()[0].1.label(), "scare");
    }

    #[test]
    fn outcome_rejects_positive_deontic_weight() {
        assert!(Outcome::new("saintly", rat(1, 1), rat(0, 1)).is_err());
    }

    #[test]
    fn conditioning_on_sure_event_is_identity() {
        let p = two_state_problem();
        let all: Vec<&str> = p.states().iter().map(|s| s.label.as_str()).collect();
        assert_eq!(p.condition(&all).unwrap(), p);
    }

    #[test]
    fn conditioning_twice_equals_intersection() {
        let states = vec![
            State { label: "a".into(), prior: rat(1, 4) },
            State { label: "b".into(), prior: rat(1, 4) },
            State { label: "c".into(), prior: rat(1, 2) },
        ];
        let acts = vec![Act {
            label: "x".into(),
            outcomes: vec![
                Outcome::harmless("oa", rat(1, 1)),
                Outcome::harmless("ob", rat(2, 1)),
                Outcome::harmless("oc", rat(3, 1)),
            ],
        }];
        let p = DecisionProblem::new(states, acts).unwrap();
        let nested = p.condition(&["a", "b"]).unwrap().condition(&["a"]).unwrap();
        let direct = p.condition(&["a"]).unwrap();
        assert_eq!(nested, direct);
    }

    #[test]
    fn conditioning_errors() {
        let p = two_state_problem();
        assert_eq!(p.condition(&[]).unwrap_err(), EngineError::EmptyEvent);
        assert_eq!(
            p.condition(&["nowhere"]).unwrap_err(),
            EngineError::UnknownState("nowhere".into())
        );
    }

    #[test]
    fn zero_probability_event_is_rejected() {
        let states = vec![
            State { label: "a".into(), prior: rat(1, 1) },
            State { label: "b".into(), prior: rat(0, 1) },
        ];
        let acts = vec![Act {
            label: "x".into(),
            outcomes: vec![
                Outcome::harmless("oa", rat(0, 1)),
                Outcome::harmless("ob", rat(0, 1)),
            ],
        }];
        let p = DecisionProblem::new(states, acts).unwrap();
        assert_eq!(
            p.condition(&["b"]).unwrap_err(),
            EngineError::ZeroProbabilityEvent
        );
    }

    #[test]
    fn lint_flags_violation_valued_above_its_act_mates() {
        let states = vec![
            State { label: "s0".into(), prior: rat(1, 2) },
            State { label: "s1".into(), prior: rat(1, 2) },
        ];
        let acts = vec![Act {
            label: "odd".into(),
            outcomes: vec![
                Outcome::new("kill", rat(-100, 1), rat(5, 1)).unwrap(),
                Outcome::harmless("idle", rat(0, 1)),
            ],
        }];
        let p = DecisionProblem::new(states, acts).unwrap();
        assert_eq!(p.lint().len(), 1);
    }

    fn two_state_problem() -> DecisionProblem<Rational> {
        let states = vec![
            State { label: "s0".into(), prior: rat(1, 100) },
            State { label: "s1".into(), prior: rat(99, 100) },
        ];
        let acts = vec![
            Act { label: "go".into(), outcomes: vec![kill(), scare()] },
            Act {
                label: "stay".into(),
                outcomes: vec![
                    Outcome::harmless("deaths", rat(-1000, 1)),
                    Outcome::harmless("nothing", rat(0, 1)),
                ],
            },
        ];
        DecisionProblem::new(states, acts).unwrap()
    }
}

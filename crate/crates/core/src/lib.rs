//! Choice rules for agents with absolute constraints, plus the machinery to
//! probe them: brute-force property checkers, gridworld environments with
//! ground-truth risk oracles, and tabular learners that train against those
//! rules.
//!
//! The rule arithmetic in [`engine`] and the checkers in [`lab`] are generic
//! over [`scalar::Scalar`]; the canonical instantiation is exact
//! [`Rational`] arithmetic, because the interesting behavior lives exactly
//! on rounding boundaries. The concrete aliases below are what the rest of
//! the workspace uses.

pub mod agents;
pub mod engine;
pub mod lab;
pub mod scalar;
pub mod worlds;

pub use scalar::Scalar;

/// Exact arithmetic the production rule runs on.
pub type Rational = num_rational::BigRational;

/// Build an exact rational from a numerator and denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    <Rational as Scalar>::from_ratio(n, d)
}

pub type Outcome = engine::Outcome<Rational>;
pub type Prospect = engine::Prospect<Rational>;
pub type DecisionProblem = engine::DecisionProblem<Rational>;
pub type State = engine::State<Rational>;
pub type Act = engine::Act<Rational>;
pub type ChoiceRule = engine::ChoiceRule<Rational>;
pub type RiskLedger = engine::RiskLedger<Rational>;
pub type Choice = engine::Choice<Rational>;
pub type ActScore = engine::ActScore<Rational>;

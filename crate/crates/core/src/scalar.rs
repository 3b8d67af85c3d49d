//! Scalar abstraction for the choice-rule arithmetic.
//!
//! The engine's math is agnostic about the number type: it needs a signed
//! field with ordering and a nearest-integer rounding. The canonical
//! instantiation is [`num_rational::BigRational`] — grain boundaries are
//! decided by exact comparisons, so the production rule runs on exact
//! rationals end to end. `f32`/`f64` instantiations exist for quick
//! approximate evaluation and for exercising the generic code path.

use std::fmt;

use num_traits::{Num, Signed, ToPrimitive};

/// Numeric type the engine can run on.
///
/// `round_half_away` must round to the nearest integer with exact half-way
/// cases rounded away from zero; the tie direction is load-bearing (a
/// half-grain risk counts as crossing the boundary).
pub trait Scalar: Num + Signed + PartialOrd + Clone + fmt::Debug + fmt::Display {
    /// Nearest integer, ties away from zero.
    fn round_half_away(&self) -> Self;

    /// Construct `n / d`. Panics if `d == 0`.
    fn from_ratio(n: i64, d: i64) -> Self;

    /// Lossy conversion for display and for handing values to the learner.
    fn to_f64_lossy(&self) -> f64;

    /// Construct an integer value.
    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
}

impl Scalar for f64 {
    fn round_half_away(&self) -> Self {
        self.round()
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        n as f64 / d as f64
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn round_half_away(&self) -> Self {
        self.round()
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        n as f32 / d as f32
    }

    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for num_rational::BigRational {
    fn round_half_away(&self) -> Self {
        // Ratio::round is documented to round half-way cases away from zero.
        self.round()
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        num_rational::BigRational::new(n.into(), d.into())
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Total ordering for scalars. NaN is outside the engine's domain; inputs
/// are validated before they reach a comparison.
pub fn cmp<S: Scalar>(a: &S, b: &S) -> std::cmp::Ordering {
    a.partial_cmp(b).expect("scalar comparison on NaN")
}

//! Scalar abstraction for probability and return arithmetic.
//!
//! Enumeration runs either in exact rational arithmetic ([`crate::Rational`])
//! or in `f64`. Inputs are always given as small rationals; the scalar type
//! decides whether they stay exact or get rounded once on conversion.

use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

use crate::Ratio64;

/// Numeric scalar for probabilities and returns.
pub trait Scalar: Num + Clone + PartialOrd + std::fmt::Debug + std::fmt::Display {
    fn from_ratio(r: Ratio64) -> Self;

    fn to_f64(&self) -> f64;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(Ratio64::from_integer(n))
    }
}

impl Scalar for f64 {
    fn from_ratio(r: Ratio64) -> Self {
        *r.numer() as f64 / *r.denom() as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for BigRational {
    fn from_ratio(r: Ratio64) -> Self {
        BigRational::new((*r.numer()).into(), (*r.denom()).into())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn rational_conversion_is_exact() {
        let third = BigRational::from_ratio(Ratio64::new(1, 3));
        let sum = third.clone() + third.clone() + third;
        assert!(sum.is_one());
    }

    #[test]
    fn float_conversion_rounds_once() {
        assert_eq!(f64::from_ratio(Ratio64::new(1, 2)), 0.5);
        assert_eq!(f64::from_ratio(Ratio64::new(2, 4)), 0.5);
    }
}

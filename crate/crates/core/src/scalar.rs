//! Scalar abstractions shared by the eigensolver and the walk-series code.
//!
//! Two tiers:
//! - [`Scalar`]: a field element that can be exact (`BigRational`) or
//!   floating (`f32`, `f64`). Series coefficients and moment sums live here.
//! - [`Real`]: a floating type used by the dense eigensolver.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// Field element usable as a series coefficient or walk weight.
pub trait Scalar: Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + Send + Sync + 'static {
    /// Whether arithmetic on this type is exact.
    const EXACT: bool;

    /// Lossy conversion used when exact values feed numeric routines.
    fn as_f64(&self) -> f64;

    /// Square root when it is representable in the type.
    ///
    /// For floats this is the ordinary square root of a non-negative value;
    /// for rationals it succeeds only for perfect squares.
    fn sqrt_exact(&self) -> Option<Self>;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits scalar")
    }

    fn from_big(v: &BigInt) -> Self;
}

macro_rules! impl_float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn as_f64(&self) -> f64 {
                *self as f64
            }

            fn sqrt_exact(&self) -> Option<Self> {
                if *self < 0.0 {
                    None
                } else {
                    Some(self.sqrt())
                }
            }

            fn from_big(v: &BigInt) -> Self {
                v.to_f64().unwrap_or(f64::NAN) as $t
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn as_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let num = self.numer().sqrt();
        let den = self.denom().sqrt();
        if &(&num * &num) == self.numer() && &(&den * &den) == self.denom() {
            Some(BigRational::new(num, den))
        } else {
            None
        }
    }

    fn from_big(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
}

/// Floating type for the dense symmetric eigensolver.
pub trait Real: Scalar + Float + Copy {
    /// Rounds an `f64` into the type.
    fn cast(v: f64) -> Self;

    fn epsilon_f64() -> f64 {
        Scalar::as_f64(&<Self as Float>::epsilon())
    }
}

impl Real for f32 {
    fn cast(v: f64) -> Self {
        v as f32
    }
}

impl Real for f64 {
    fn cast(v: f64) -> Self {
        v
    }
}

/// `a / b` as an exact rational.
pub fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_exact_only_for_squares() {
        assert_eq!(ratio(9, 4).sqrt_exact(), Some(ratio(3, 2)));
        assert_eq!(ratio(2, 1).sqrt_exact(), None);
        assert_eq!(ratio(-1, 1).sqrt_exact(), None);
        assert_eq!(BigRational::zero().sqrt_exact(), Some(BigRational::zero()));
    }

    #[test]
    fn float_sqrt() {
        assert_eq!(4.0f64.sqrt_exact(), Some(2.0));
        assert_eq!((-4.0f32).sqrt_exact(), None);
        assert!(!<f64 as Scalar>::EXACT);
        assert!(<BigRational as Scalar>::EXACT);
    }
}

//! Truncated formal power series in `x = 1/λ`.
//!
//! A series stores the coefficients it knows, `c[0..=known]`; everything
//! past `known` is unknown. Products and square roots track how far their
//! result is still determined.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Formal<T> {
    pub coefficients: Vec<T>,
}

impl<T: Scalar> Formal<T> {
    pub fn new(coefficients: Vec<T>) -> Self {
        assert!(!coefficients.is_empty(), "a series knows at least its constant term");
        Self { coefficients }
    }

    /// Highest order whose coefficient is determined.
    pub fn known(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Smallest order that may carry a non-zero coefficient.
    pub fn valuation(&self) -> usize {
        self.coefficients.iter().position(|c| !c.is_zero()).unwrap_or(self.coefficients.len())
    }

    fn truncated(mut self, known: usize) -> Self {
        self.coefficients.truncate(known + 1);
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.known().min(other.known());
        Self::new((0..=k).map(|i| self.coefficients[i].clone() + other.coefficients[i].clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let k = self.known().min(other.known());
        Self::new((0..=k).map(|i| self.coefficients[i].clone() - other.coefficients[i].clone()).collect())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coefficients.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = (self.known() + other.valuation()).min(other.known() + self.valuation());
        let mut out = vec![T::zero(); k + 1];
        for (i, a) in self.coefficients.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coefficients.iter().enumerate() {
                if i + j > k {
                    break;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// Square root with non-negative leading coefficient.
    ///
    /// The valuation must be even and the leading coefficient a square in
    /// `T`; the result is known `valuation / 2` orders less far.
    pub fn sqrt(&self) -> Result<Self> {
        let v = self.valuation();
        if v > self.known() {
            return Err(Error::BadDiscriminant("vanishes to every known order".into()));
        }
        if v % 2 == 1 {
            return Err(Error::BadDiscriminant(format!("odd valuation {v}")));
        }
        let lead = &self.coefficients[v];
        if lead.is_negative() {
            return Err(Error::BadDiscriminant(format!("negative leading coefficient {lead}")));
        }
        let b0 = lead
            .sqrt_exact()
            .ok_or_else(|| Error::BadDiscriminant(format!("leading coefficient {lead} is not a square")))?;
        let shifted = &self.coefficients[v..];
        let k = shifted.len() - 1;
        let two_b0 = b0.clone() + b0.clone();
        let mut b = vec![b0];
        for j in 1..=k {
            let mut acc = shifted[j].clone();
            for i in 1..j {
                acc = acc - b[i].clone() * b[j - i].clone();
            }
            b.push(acc / two_b0.clone());
        }
        let half = v / 2;
        let mut out = vec![T::zero(); half];
        out.extend(b);
        Ok(Self::new(out).truncated(self.known() - half))
    }

    pub fn to_f64(&self) -> Formal<f64> {
        Formal::new(self.coefficients.iter().map(Scalar::as_f64).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use num_rational::BigRational;

    fn q(v: &[i64]) -> Formal<BigRational> {
        Formal::new(v.iter().map(|&x| ratio(x, 1)).collect())
    }

    #[test]
    fn sqrt_of_square() {
        let a = q(&[0, 2, 6, 16, 42]);
        let sq = a.mul(&a);
        assert_eq!(sq.known(), 5);
        let root = sq.sqrt().unwrap();
        assert_eq!(root.coefficients, a.coefficients);
    }

    #[test]
    fn unknown_tail_shrinks_products() {
        let zero = q(&[0, 0, 0]);
        let b = q(&[1, 1, 1]);
        assert_eq!(zero.mul(&zero).known(), 5);
        assert_eq!(zero.mul(&b).known(), 2);
    }

    #[test]
    fn non_square_leading_term_is_rejected() {
        assert!(q(&[2, 1]).sqrt().is_err());
        assert!(q(&[0, 1, 1]).sqrt().is_err());
        let f = Formal::new(vec![2.0f64, 1.0]);
        let r = f.sqrt().unwrap();
        assert!((r.coefficients[0] - 2f64.sqrt()).abs() < 1e-15);
    }
}

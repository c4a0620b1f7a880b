//! Truncated power series in `x` with [`MarkerPoly`] coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::marker_poly::term_factors;
use super::{Marker, MarkerPoly};
use crate::error::{Error, Result};

/// A power series in `x` known exactly up to and including degree `order`.
///
/// Invariants:
/// - `coeffs.len() == order + 1`, index = x-degree;
/// - arithmetic never produces terms of degree above `order`;
/// - mixing orders is an error, never an implicit min.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<MarkerPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![MarkerPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, MarkerPoly::one())
    }

    /// The series `p * x^degree`; degrees beyond the order are dropped.
    pub fn monomial(order: usize, degree: usize, p: MarkerPoly) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = p;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<MarkerPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the x^0 coefficient");
        TruncatedSeries {
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient polynomial of `x^degree`.
    pub fn coeff(&self, degree: usize) -> Result<&MarkerPoly> {
        self.coeffs.get(degree).ok_or(Error::DegreeOutOfRange {
            degree,
            order: self.order,
        })
    }

    /// All coefficients, index = x-degree.
    pub fn coeffs(&self) -> &[MarkerPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MarkerPoly::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(MarkerPoly::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut coeffs = vec![MarkerPoly::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(self.order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j].add_mul_assign(a, b);
            }
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Multiply every coefficient by a fixed marker polynomial.
    pub fn scale(&self, p: &MarkerPoly) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Multiplicative inverse up to the truncation order.
    ///
    /// Requires constant term exactly 1, which keeps every coefficient of
    /// the inverse an integer polynomial. The recurrence is the usual long
    /// division: b_0 = 1, b_n = -sum_{i=1..n} a_i b_{n-i}.
    pub fn recip(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotInvertible);
        }
        let mut inv = vec![MarkerPoly::zero(); self.order + 1];
        inv[0] = MarkerPoly::one();
        for n in 1..=self.order {
            let mut acc = MarkerPoly::zero();
            for i in 1..=n {
                if self.coeffs[i].is_zero() || inv[n - i].is_zero() {
                    continue;
                }
                acc.add_mul_assign(&self.coeffs[i], &inv[n - i]);
            }
            inv[n] = -&acc;
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: inv,
        })
    }

    /// Termwise formal partial derivative with respect to one marker.
    pub fn diff_marker(&self, which: Marker) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.diff(which)).collect(),
        }
    }

    /// Substitute an integer value for one marker in every coefficient.
    pub fn eval_marker(&self, which: Marker, value: i64) -> Self {
        let v = BigInt::from(value);
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.eval(which, &v)).collect(),
        }
    }

    /// Discard information above `new_order` (which must not exceed the
    /// current order).
    pub fn truncate(&self, new_order: usize) -> Result<Self> {
        if new_order > self.order {
            return Err(Error::DegreeOutOfRange {
                degree: new_order,
                order: self.order,
            });
        }
        Ok(TruncatedSeries {
            order: new_order,
            coeffs: self.coeffs[..=new_order].to_vec(),
        })
    }
}

impl fmt::Display for TruncatedSeries {
    /// Canonical text form: terms in ascending x-degree, then ascending
    /// (y, r, l, d) exponents, e.g. `1 + x*y + x^2*y^2*l`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (degree, poly) in self.coeffs.iter().enumerate() {
            for (expos, coeff) in poly.iter() {
                if first {
                    if coeff.is_negative() {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if coeff.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                write!(f, "{}", term_factors(degree, expos, coeff))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn univariate(coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| MarkerPoly::from_int(c)).collect())
    }

    #[test]
    fn add_cancels() {
        let a = univariate(&[1, 1, 0]); // 1 + x
        let b = univariate(&[1, -1, 0]); // 1 - x
        assert_eq!(a.add(&b).unwrap(), univariate(&[2, 0, 0]));
    }

    #[test]
    fn add_identity_and_distinct_markers() {
        let a = univariate(&[3, 0, 5]);
        assert_eq!(a.add(&TruncatedSeries::zero(2)).unwrap(), a);

        let xy = TruncatedSeries::monomial(2, 1, MarkerPoly::marker(Marker::Parts));
        let xr = TruncatedSeries::monomial(2, 1, MarkerPoly::marker(Marker::Rises));
        let sum = xy.add(&xr).unwrap();
        let expected = &MarkerPoly::marker(Marker::Parts) + &MarkerPoly::marker(Marker::Rises);
        assert_eq!(sum.coeff(1).unwrap(), &expected);
    }

    #[test]
    fn add_order_mismatch() {
        let a = univariate(&[1, 1]);
        let b = univariate(&[1, 1, 1]);
        assert_eq!(
            a.add(&b),
            Err(Error::OrderMismatch { left: 1, right: 2 })
        );
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn mul_truncates() {
        let a = univariate(&[1, 1, 0]);
        let b = univariate(&[1, -1, 0]);
        assert_eq!(a.mul(&b).unwrap(), univariate(&[1, 0, -1]));

        let one = TruncatedSeries::one(2);
        let c = univariate(&[1, 1, 1]);
        assert_eq!(c.mul(&one).unwrap(), c);
    }

    #[test]
    fn mul_adds_marker_exponents() {
        let xy = TruncatedSeries::monomial(3, 1, MarkerPoly::marker(Marker::Parts));
        let xyl = TruncatedSeries::monomial(
            3,
            1,
            &MarkerPoly::marker(Marker::Parts) * &MarkerPoly::marker(Marker::Levels),
        );
        let p = xy.mul(&xyl).unwrap();
        assert_eq!(p.coeff(2).unwrap().coeff(&[2, 0, 1, 0]), BigInt::one());
        assert_eq!(p.to_string(), "x^2*y^2*l");
    }

    #[test]
    fn recip_geometric() {
        // 1/(1 - x y) = 1 + x y + x^2 y^2 + x^3 y^3
        let y = MarkerPoly::marker(Marker::Parts);
        let a = TruncatedSeries::one(3)
            .sub(&TruncatedSeries::monomial(3, 1, y.clone()))
            .unwrap();
        let inv = a.recip().unwrap();
        for n in 0..=3 {
            let mut expected = MarkerPoly::one();
            for _ in 0..n {
                expected = &expected * &y;
            }
            assert_eq!(inv.coeff(n).unwrap(), &expected);
        }
        assert!(a.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn recip_of_one_and_errors() {
        assert!(TruncatedSeries::one(5).recip().unwrap().is_one());
        assert_eq!(univariate(&[0, 1]).recip(), Err(Error::NotInvertible));
        assert_eq!(univariate(&[2, 1]).recip(), Err(Error::NotInvertible));
        assert_eq!(univariate(&[-1, 1]).recip(), Err(Error::NotInvertible));
    }

    #[test]
    fn recip_spec_example() {
        // a = 1 - x^2 y^2 (l^2 - d r), order 6: a * recip(a) == 1
        let y = MarkerPoly::marker(Marker::Parts);
        let r = MarkerPoly::marker(Marker::Rises);
        let l = MarkerPoly::marker(Marker::Levels);
        let d = MarkerPoly::marker(Marker::Drops);
        let p = &(&y * &y) * &(&(&l * &l) - &(&d * &r));
        let a = TruncatedSeries::one(6)
            .sub(&TruncatedSeries::monomial(6, 2, p))
            .unwrap();
        assert!(a.mul(&a.recip().unwrap()).unwrap().is_one());
    }

    #[test]
    fn diff_and_eval_are_termwise() {
        let y = MarkerPoly::marker(Marker::Parts);
        let r = MarkerPoly::marker(Marker::Rises);
        let s = TruncatedSeries::monomial(2, 1, &(&y * &y) * &r);
        let ds = s.diff_marker(Marker::Rises);
        assert_eq!(ds.coeff(1).unwrap(), &(&y * &y));
        assert!(TruncatedSeries::one(4)
            .diff_marker(Marker::Drops)
            .is_zero());

        let l = MarkerPoly::marker(Marker::Levels);
        let s = TruncatedSeries::monomial(2, 1, &(&y * &l) + &y);
        assert_eq!(
            s.eval_marker(Marker::Levels, 0).coeff(1).unwrap(),
            &y
        );
    }

    #[test]
    fn coeff_bounds() {
        let a = univariate(&[1, 2]);
        assert_eq!(a.coeff(1).unwrap(), &MarkerPoly::from_int(2));
        assert_eq!(
            a.coeff(2).err(),
            Some(Error::DegreeOutOfRange { degree: 2, order: 1 })
        );
    }

    #[test]
    fn truncate_discards_high_degrees() {
        let a = univariate(&[1, 2, 3, 4]);
        assert_eq!(a.truncate(1).unwrap(), univariate(&[1, 2]));
        assert!(a.truncate(9).is_err());
    }

    #[test]
    fn display_canonical() {
        assert_eq!(univariate(&[1, 1, 2, 4]).to_string(), "1 + x + 2*x^2 + 4*x^3");
        assert_eq!(univariate(&[1, -1]).to_string(), "1 - x");
        assert_eq!(univariate(&[-2, 0]).to_string(), "-2");
        assert_eq!(TruncatedSeries::zero(3).to_string(), "0");
    }
}

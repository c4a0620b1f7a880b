//! Dense univariate integer polynomials, the building blocks of catalog
//! entries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyseries::{MarkerPoly, TruncatedSeries};

/// Polynomial in `x` with integer coefficients; index = degree, no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Poly::from_coeffs(&[c])
    }

    /// `c * x^degree`
    pub fn monomial(degree: usize, c: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::from(c);
        Poly { coeffs }.normalized()
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Poly {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly { coeffs }.normalized()
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs }.normalized()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (degree, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
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
            let abs = coeff.abs();
            match (degree, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{abs}*x")?,
                (_, true) => write!(f, "x^{degree}")?,
                (_, false) => write!(f, "{abs}*x^{degree}")?,
            }
        }
        Ok(())
    }
}

/// A ratio of two integer polynomials, expandable to an exact series
/// whenever the denominator's constant term is a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGf {
    pub numerator: Poly,
    pub denominator: Poly,
}

impl RationalGf {
    pub fn new(numerator: Poly, denominator: Poly) -> Self {
        RationalGf {
            numerator,
            denominator,
        }
    }

    /// Exact series expansion by long division:
    /// `c_n = (num_n - sum_{i>=1} den_i c_{n-i}) / den_0` with `den_0 = ±1`.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        let d0 = self.denominator.coeff(0);
        if !d0.is_one() && !(-&d0).is_one() {
            return Err(Error::NonUnitDenominator);
        }
        let mut series: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut value = self.numerator.coeff(n);
            for i in 1..=n {
                let di = self.denominator.coeff(i);
                if !di.is_zero() {
                    value -= di * &series[n - i];
                }
            }
            series.push(value * &d0); // dividing by ±1
        }
        Ok(TruncatedSeries::from_coeffs(
            series.into_iter().map(MarkerPoly::constant).collect(),
        ))
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn expanded(num: Poly, den: Poly, order: usize) -> Vec<i64> {
        RationalGf::new(num, den)
            .expand(order)
            .unwrap()
            .coeffs()
            .iter()
            .map(|p| p.coeff(&[0; 4]).to_i64().unwrap())
            .collect()
    }

    #[test]
    fn expands_geometric() {
        assert_eq!(
            expanded(Poly::one(), Poly::from_coeffs(&[1, -1]), 3),
            vec![1, 1, 1, 1]
        );
    }

    #[test]
    fn expands_rises_total() {
        // x^3/((1+x)(1-2x)^2): frozen from the closed-form count
        // (2^{n-2}(3n-5) + (-1)^{n+1})/9 at n = 3..6
        let den = &Poly::from_coeffs(&[1, 1]) * &Poly::from_coeffs(&[1, -2]).pow(2);
        assert_eq!(
            expanded(Poly::monomial(3, 1), den, 6),
            vec![0, 0, 0, 1, 3, 9, 23]
        );
    }

    #[test]
    fn expands_palindrome_count() {
        assert_eq!(
            expanded(Poly::from_coeffs(&[1, 1]), Poly::from_coeffs(&[1, 0, -2]), 6),
            vec![1, 1, 2, 2, 4, 4, 8]
        );
    }

    #[test]
    fn negative_unit_constant_term_is_fine() {
        // (-1 + x) / (-1 + x) = 1
        let p = Poly::from_coeffs(&[-1, 1]);
        assert_eq!(expanded(p.clone(), p, 4), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn non_unit_denominator_is_an_error() {
        for den in [Poly::from_coeffs(&[0, 1]), Poly::constant(2), Poly::zero()] {
            let r = RationalGf::new(Poly::one(), den);
            assert_eq!(r.expand(3).err(), Some(Error::NonUnitDenominator));
        }
    }

    #[test]
    fn poly_display() {
        let p = &Poly::from_coeffs(&[1, -2]) * &Poly::from_coeffs(&[1, 0, 3]);
        assert_eq!(p.to_string(), "1 - 2*x + 3*x^2 - 6*x^3");
    }
}

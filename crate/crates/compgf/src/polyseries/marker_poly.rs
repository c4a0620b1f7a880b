//! Sparse integer polynomials in the marker variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Exponents, Marker};

/// A multivariate polynomial in the markers `y`, `r`, `l`, `d` with
/// arbitrary-precision integer coefficients.
///
/// Canonical form: no stored coefficient is zero, so structural equality of
/// the term maps is polynomial equality. Terms are kept in a `BTreeMap`
/// keyed by exponent vector, which makes iteration order (and hence display
/// order) the lexicographic order on (parts, rises, levels, drops).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MarkerPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl MarkerPoly {
    pub fn zero() -> Self {
        MarkerPoly::default()
    }

    pub fn one() -> Self {
        MarkerPoly::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; 4], c);
        }
        MarkerPoly { terms }
    }

    /// The polynomial consisting of a single marker variable.
    pub fn marker(m: Marker) -> Self {
        Self::monomial(exponents_of(m, 1), BigInt::one())
    }

    pub fn monomial(expos: Exponents, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(expos, coeff);
        }
        MarkerPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; 4]).is_some_and(|c| c.is_one())
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, expos: &Exponents) -> BigInt {
        self.terms.get(expos).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in ascending exponent-vector order.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(&mut self, expos: Exponents, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&expos) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&expos);
                }
            }
            None => {
                self.terms.insert(expos, coeff.clone());
            }
        }
    }

    /// Accumulate `a * b` into `self`. This is the inner loop of series
    /// multiplication, so it avoids building a temporary polynomial.
    pub(crate) fn add_mul_assign(&mut self, a: &MarkerPoly, b: &MarkerPoly) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let expos = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                self.insert_add(expos, &(ca * cb));
            }
        }
    }

    /// Formal partial derivative with respect to one marker.
    pub fn diff(&self, which: Marker) -> MarkerPoly {
        let k = which.index();
        let mut out = MarkerPoly::zero();
        for (expos, coeff) in &self.terms {
            if expos[k] == 0 {
                continue;
            }
            let mut e = *expos;
            e[k] -= 1;
            out.insert_add(e, &(coeff * BigInt::from(expos[k])));
        }
        out
    }

    /// Substitute an integer value for one marker, collapsing that exponent
    /// dimension to zero.
    pub fn eval(&self, which: Marker, value: &BigInt) -> MarkerPoly {
        let k = which.index();
        let mut out = MarkerPoly::zero();
        for (expos, coeff) in &self.terms {
            let mut e = *expos;
            let power = e[k];
            e[k] = 0;
            if power == 0 {
                out.insert_add(e, coeff);
            } else if value.is_zero() {
                // term vanishes
            } else if value.is_one() {
                out.insert_add(e, coeff);
            } else {
                out.insert_add(e, &(coeff * value.pow(power)));
            }
        }
        out
    }
}

fn exponents_of(m: Marker, e: u32) -> Exponents {
    let mut expos = [0; 4];
    expos[m.index()] = e;
    expos
}

impl Add for &MarkerPoly {
    type Output = MarkerPoly;
    fn add(self, rhs: &MarkerPoly) -> MarkerPoly {
        let mut out = self.clone();
        for (expos, coeff) in &rhs.terms {
            out.insert_add(*expos, coeff);
        }
        out
    }
}

impl Sub for &MarkerPoly {
    type Output = MarkerPoly;
    fn sub(self, rhs: &MarkerPoly) -> MarkerPoly {
        let mut out = self.clone();
        for (expos, coeff) in &rhs.terms {
            out.insert_add(*expos, &(-coeff));
        }
        out
    }
}

impl Mul for &MarkerPoly {
    type Output = MarkerPoly;
    fn mul(self, rhs: &MarkerPoly) -> MarkerPoly {
        let mut out = MarkerPoly::zero();
        out.add_mul_assign(self, rhs);
        out
    }
}

impl Neg for &MarkerPoly {
    type Output = MarkerPoly;
    fn neg(self) -> MarkerPoly {
        MarkerPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

/// Renders one term as factors `coeff * x^n * y^a * r^b * l^c * d^e`
/// (sign excluded), omitting unit coefficients and zero exponents.
pub(crate) fn term_factors(x_degree: usize, expos: &Exponents, coeff: &BigInt) -> String {
    let mut parts: Vec<String> = Vec::new();
    let abs = coeff.abs();
    if !abs.is_one() {
        parts.push(abs.to_string());
    }
    match x_degree {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{x_degree}")),
    }
    for m in Marker::ALL {
        let e = expos[m.index()];
        match e {
            0 => {}
            1 => parts.push(m.symbol().to_string()),
            _ => parts.push(format!("{}^{}", m.symbol(), e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for MarkerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (expos, coeff)) in self.terms.iter().enumerate() {
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", term_factors(0, expos, coeff))?;
        }
        Ok(())
    }
}

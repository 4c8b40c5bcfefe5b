//! Sparse polynomials in two variables `x`, `y` with integer coefficients.
//!
//! Only the small amount of arithmetic needed for E-polynomial level
//! cross-checks lives here; the artifact's results are carried by
//! [`LaurentPoly`](super::LaurentPoly) at y-genus level.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::Zero;

use super::laurent::LaurentPoly;

/// Integer polynomial in `(x, y)`; keys are `(x_exp, y_exp)`.
/// No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::from(1))
    }

    pub fn monomial(x_exp: i64, y_exp: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((x_exp, y_exp), c);
        }
        BivarPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for ((xe, ye), c) in iter {
            p.add_term(xe, ye, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, x_exp: i64, y_exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((x_exp, y_exp))
            .or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(x_exp, y_exp));
        }
    }

    pub fn coeff(&self, x_exp: i64, y_exp: i64) -> BigInt {
        self.terms
            .get(&(x_exp, y_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Substitute `x := 1`, collapsing onto a Laurent polynomial in `y`.
    pub fn subst_x_one(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|((_, ye), c)| (ye, c.clone())))
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for ((xe, ye), c) in rhs.terms() {
            out.add_term(xe, ye, c.clone());
        }
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for ((x1, y1), c1) in self.terms() {
            for ((x2, y2), c2) in rhs.terms() {
                out.add_term(x1 + x2, y1 + y2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly::from_terms(self.terms().map(|(k, c)| (k, -c.clone())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_substitution() {
        // (1 - x)(1 - y) = 1 - x - y + xy
        let a = BivarPoly::from_terms([((0, 0), 1.into()), ((1, 0), BigInt::from(-1))]);
        let b = BivarPoly::from_terms([((0, 0), 1.into()), ((0, 1), BigInt::from(-1))]);
        let prod = &a * &b;
        assert_eq!(prod.coeff(1, 1), BigInt::from(1));
        assert_eq!(prod.coeff(1, 0), BigInt::from(-1));
        // at x = 1 the product collapses to 0
        assert!(prod.subst_x_one().is_zero());
    }
}

//! Sparse Laurent polynomials in one variable `y`.
//!
//! Terms are kept in a `BTreeMap<i64, C>` from exponent to coefficient, so
//! iteration is always in ascending exponent order and output is
//! deterministic.
//!
//! Invariants:
//! - no stored coefficient is zero (enforced on every operation)
//! - exponents may be negative; the zero polynomial is the empty map
//!
//! `LaurentPoly` (integer coefficients) is the value type of all y-genera.
//! `RatLaurent` (rational coefficients) exists for intermediate values that
//! carry factors like mu(m)/m and is converted back with
//! [`RatLaurent::try_into_integer`], which fails hard if any denominator
//! survives.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient rings usable in [`Poly`].
pub trait PolyCoeff:
    Clone + Eq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + fmt::Debug
{
}

impl<T> PolyCoeff for T where
    T: Clone + Eq + Zero + One + Neg<Output = T> + Sub<Output = T> + fmt::Debug
{
}

/// A sparse Laurent polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Debug, Default, PartialOrd, Ord)]
pub struct Poly<C> {
    terms: BTreeMap<i64, C>,
}

/// Integer-coefficient Laurent polynomial in `y`.
pub type LaurentPoly = Poly<BigInt>;
/// Rational-coefficient Laurent polynomial in `y`.
pub type RatLaurent = Poly<BigRational>;

impl<C: PolyCoeff> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// The single term `c * y^exp` (zero polynomial if `c` is zero).
    pub fn monomial(exp: i64, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { terms }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// Build from (exponent, coefficient) pairs, summing duplicates and
    /// dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (exp, c) in iter {
            p.add_term(exp, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `y^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Add `c * y^exp` in place, keeping the no-zero-coefficients invariant.
    pub fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            None => {
                self.terms.insert(exp, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
        }
    }

    /// Multiply every term by `c * y^exp`.
    pub fn mul_term(&self, exp: i64, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms().map(|(e, k)| (e + exp, k.clone() * c.clone())))
    }

    /// Multiply by `y^exp`.
    pub fn shift(&self, exp: i64) -> Self {
        self.mul_term(exp, &C::one())
    }

    /// Exponentiation by squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `y = 1`, i.e. the sum of all coefficients.
    pub fn eval_one(&self) -> C {
        let mut acc = C::zero();
        for (_, c) in self.terms() {
            acc = acc + c.clone();
        }
        acc
    }

    /// The substitution `y -> -1/y` followed by multiplication with `y^{2n}`:
    /// each term `c * y^e` maps to `c * (-1)^e * y^{2n - e}`.
    pub fn reverse_signed(&self, n: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| {
            let c = if e.rem_euclid(2) == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            (2 * n - e, c)
        }))
    }
}

impl<'a, 'b, C: PolyCoeff> Add<&'b Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &'b Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a, 'b, C: PolyCoeff> Sub<&'b Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &'b Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<'a, 'b, C: PolyCoeff> Mul<&'b Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &'b Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: PolyCoeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::from_terms(self.terms().map(|(e, c)| (e, -c.clone())))
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<C: PolyCoeff> $trait for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, C: PolyCoeff> $trait<&'a Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &'a Poly<C>) -> Poly<C> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl LaurentPoly {
    /// Monomial with an `i64` coefficient.
    pub fn int_monomial(exp: i64, c: i64) -> Self {
        Self::monomial(exp, BigInt::from(c))
    }

    /// Exact polynomial division; `Err(Internal)` if `divisor` does not
    /// divide `self` exactly over the integers.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::internal("exact division by zero polynomial"));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both operands to ordinary polynomials; Laurent units y^k are
        // invertible, so this does not affect exactness.
        let a_shift = self.min_exp().unwrap();
        let b_shift = divisor.min_exp().unwrap();
        let mut rem: BTreeMap<i64, BigInt> = self
            .terms()
            .map(|(e, c)| (e - a_shift, c.clone()))
            .collect();
        let div: Vec<(i64, BigInt)> = divisor
            .terms()
            .map(|(e, c)| (e - b_shift, c.clone()))
            .collect();
        let (lead_exp, lead_coeff) = div.last().expect("nonzero divisor").clone();
        let mut quot = LaurentPoly::zero();
        while let Some((&top_exp, _)) = rem.iter().next_back() {
            if top_exp < lead_exp {
                break;
            }
            let top_coeff = rem.get(&top_exp).unwrap().clone();
            let (q, r) = num_integer::div_rem(top_coeff, lead_coeff.clone());
            if !r.is_zero() {
                return Err(Error::internal("inexact polynomial division"));
            }
            let q_exp = top_exp - lead_exp;
            for (e, c) in &div {
                let delta = -(c * &q);
                let entry = rem.entry(q_exp + e).or_insert_with(BigInt::zero);
                *entry += delta;
                if entry.is_zero() {
                    rem.remove(&(q_exp + e));
                }
            }
            quot.add_term(q_exp, q);
        }
        if !rem.is_empty() {
            return Err(Error::internal("nonzero remainder in exact division"));
        }
        Ok(quot.shift(a_shift - b_shift))
    }

    /// Lift to rational coefficients.
    pub fn to_rational(&self) -> RatLaurent {
        RatLaurent::from_terms(
            self.terms()
                .map(|(e, c)| (e, BigRational::from_integer(c.clone()))),
        )
    }
}

impl RatLaurent {
    /// Convert to integer coefficients; `Err(Internal)` if any denominator
    /// is not 1. A surviving denominator indicates a formula transcription
    /// error, never a rounding situation.
    pub fn try_into_integer(&self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            if !c.is_integer() {
                return Err(Error::internal(format!(
                    "rational coefficient {c} at y^{e} did not clear to an integer"
                )));
            }
            out.add_term(e, c.to_integer());
        }
        Ok(out)
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, s: &BigRational) -> RatLaurent {
        self.mul_term(0, s)
    }
}

impl fmt::Display for LaurentPoly {
    /// Human form, ascending exponents: `-2*y^4 - y^5 + y^6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = abs.is_one() && e != 0;
            if !unit_coeff {
                write!(f, "{abs}")?;
            }
            if e != 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "y")?;
                } else {
                    write!(f, "y^{e}")?;
                }
            }
        }
        Ok(())
    }
}

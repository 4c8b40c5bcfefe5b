//! The cyclic-group algebra `Z[y][zeta] / (zeta^q - 1)`, kept in canonical
//! form modulo the q-th cyclotomic polynomial.
//!
//! Elements are stored as `q` Laurent-polynomial components, component `i`
//! being the coefficient of `zeta^i`, with exponent arithmetic
//! `zeta^a * zeta^b = zeta^{(a+b) mod q}`. After every operation the
//! representative is reduced by the q-th cyclotomic polynomial (monic with
//! integer coefficients, so the reduction is exact and stays over `Z[y]`).
//! That canonical form is what makes full orbit sums over all q-th roots of
//! unity collapse to honest scalars: such sums are fixed by every
//! substitution `zeta -> zeta^u` with `u` a unit, hence rational, and the
//! cyclotomic reduction exhibits the rational value directly in
//! `comps[0]` with `comps[1..]` vanishing.

use std::collections::HashMap;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Dense ascending coefficients of the q-th cyclotomic polynomial.
///
/// Computed as `(T^q - 1) / prod_{e|q, e<q} Phi_e` by exact division;
/// every intermediate divisor is monic, so all arithmetic stays in `Z`.
pub fn cyclotomic_coeffs(q: u64) -> Vec<BigInt> {
    fn go(q: u64, memo: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
        if let Some(v) = memo.get(&q) {
            return v.clone();
        }
        let mut acc = vec![BigInt::zero(); (q + 1) as usize];
        acc[0] = BigInt::from(-1);
        acc[q as usize] = BigInt::one();
        for e in 1..q {
            if q % e == 0 {
                let phi_e = go(e, memo);
                acc = div_exact_monic(acc, &phi_e);
            }
        }
        memo.insert(q, acc.clone());
        acc
    }
    assert!(q >= 1, "cyclotomic polynomial needs q >= 1");
    go(q, &mut HashMap::new())
}

/// Exact division of dense integer polynomials by a monic divisor.
fn div_exact_monic(mut num: Vec<BigInt>, div: &[BigInt]) -> Vec<BigInt> {
    let dd = div.len() - 1;
    debug_assert!(div[dd].is_one(), "divisor must be monic");
    let nd = num.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        let c = num[i].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in div.iter().enumerate() {
            num[i - dd + j] -= &c * dc;
        }
        quot[i - dd] = c;
    }
    debug_assert!(num.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// An element of the group algebra of the cyclic group of order `q` over
/// Laurent polynomials, in cyclotomic canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgElem {
    q: usize,
    comps: Vec<LaurentPoly>,
}

impl GroupAlgElem {
    pub fn zero(q: usize) -> Self {
        assert!(q >= 1, "group order must be positive");
        GroupAlgElem {
            q,
            comps: vec![LaurentPoly::zero(); q],
        }
    }

    pub fn one(q: usize) -> Self {
        Self::scalar(q, LaurentPoly::one())
    }

    /// The scalar `p * zeta^0`.
    pub fn scalar(q: usize, p: LaurentPoly) -> Self {
        Self::term(q, 0, p)
    }

    /// The single term `coeff * zeta^k` (`k` is reduced mod `q`).
    pub fn term(q: usize, k: i64, coeff: LaurentPoly) -> Self {
        let mut e = Self::zero(q);
        e.comps[k.rem_euclid(q as i64) as usize] = coeff;
        e.reduce();
        e
    }

    /// `zeta^k`.
    pub fn root_power(q: usize, k: i64) -> Self {
        Self::term(q, k, LaurentPoly::one())
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Component `i`, the coefficient of `zeta^i` of the canonical form.
    pub fn comps(&self) -> &[LaurentPoly] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(LaurentPoly::is_zero)
    }

    /// True iff `comps[1..q-1]` all vanish.
    pub fn is_scalar(&self) -> bool {
        self.comps[1..].iter().all(LaurentPoly::is_zero)
    }

    /// Exponentiation by repeated multiplication.
    pub fn pow(&self, e: u64) -> GroupAlgElem {
        let mut acc = GroupAlgElem::one(self.q);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Extract the scalar value, asserting scalarity first.
    pub fn scalar_value(&self) -> Result<LaurentPoly> {
        if !self.is_scalar() {
            return Err(Error::internal(format!(
                "group-algebra element of order {} is not scalar",
                self.q
            )));
        }
        Ok(self.comps[0].clone())
    }

    /// Reduce the representative by the q-th cyclotomic polynomial.
    fn reduce(&mut self) {
        let phi = cyclotomic_coeffs(self.q as u64);
        let deg = phi.len() - 1;
        for i in (deg..self.q).rev() {
            if self.comps[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut self.comps[i]);
            for (j, pc) in phi.iter().enumerate().take(deg) {
                let delta = c.mul_term(0, &(-pc.clone()));
                self.comps[i - deg + j] = &self.comps[i - deg + j] + &delta;
            }
        }
    }
}

impl Add for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn add(self, rhs: &GroupAlgElem) -> GroupAlgElem {
        assert_eq!(self.q, rhs.q, "mismatched group orders");
        let mut out = self.clone();
        for (i, c) in rhs.comps.iter().enumerate() {
            out.comps[i] = &out.comps[i] + c;
        }
        out
    }
}

impl Mul for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn mul(self, rhs: &GroupAlgElem) -> GroupAlgElem {
        assert_eq!(self.q, rhs.q, "mismatched group orders");
        let mut out = GroupAlgElem::zero(self.q);
        for (a, ca) in self.comps.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.comps.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let k = (a + b) % self.q;
                let prod = ca * cb;
                out.comps[k] = &out.comps[k] + &prod;
            }
        }
        out.reduce();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomics_are_the_classical_ones() {
        let to_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(to_i64(cyclotomic_coeffs(1)), vec![-1, 1]);
        assert_eq!(to_i64(cyclotomic_coeffs(2)), vec![1, 1]);
        assert_eq!(to_i64(cyclotomic_coeffs(4)), vec![1, 0, 1]);
        assert_eq!(to_i64(cyclotomic_coeffs(6)), vec![1, -1, 1]);
        assert_eq!(to_i64(cyclotomic_coeffs(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let i = GroupAlgElem::root_power(4, 1);
        let sq = &i * &i;
        assert_eq!(
            sq.scalar_value().unwrap(),
            LaurentPoly::int_monomial(0, -1)
        );
    }

    #[test]
    fn group_law_on_exponents() {
        // zeta^3 * zeta^3 = zeta^6 = zeta^2 at q = 4.
        let a = GroupAlgElem::root_power(4, 3);
        assert_eq!(&a * &a, GroupAlgElem::root_power(4, 2));
    }

    #[test]
    fn non_scalar_extraction_fails() {
        let z = GroupAlgElem::root_power(3, 1);
        assert!(!z.is_scalar());
        assert!(matches!(z.scalar_value(), Err(Error::Internal(_))));
    }

    #[test]
    fn unit_orbit_sum_is_scalar() {
        // sum over units mod 4 of zeta^{-2l} = 2*zeta^2 = -2.
        let mut s = GroupAlgElem::zero(4);
        for l in [1i64, 3] {
            s = &s + &GroupAlgElem::root_power(4, -2 * l);
        }
        assert_eq!(
            s.scalar_value().unwrap(),
            LaurentPoly::int_monomial(0, -2)
        );
    }
}

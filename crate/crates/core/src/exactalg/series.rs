//! Truncated power series in `t` with Laurent-polynomial coefficients.
//!
//! A `TruncSeries` of order `N` stores coefficients for `t^0 .. t^N`
//! inclusive and nothing above. Arithmetic never reads or writes indices
//! above the order; the product of series of orders `o1`, `o2` has order
//! `min(o1, o2)`.

use std::ops::{Add, Mul};

use super::laurent::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TruncSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    /// The constant series 1 of the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    /// Build from explicit coefficients for `t^0 .. t^{len-1}`.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least its order-0 term");
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; zero above the order.
    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, p: LaurentPoly) {
        assert!(k <= self.order(), "index above truncation order");
        self.coeffs[k] = p;
    }

    /// Exponentiation by repeated multiplication (order is preserved).
    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncSeries::zero(order);
        for k in 0..=order {
            out.coeffs[k] = &self.coeffs[k] + &rhs.coeffs[k];
        }
        out
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                out.coeffs[i + j] = &out.coeffs[i + j] + &prod;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lin(c: i64) -> TruncSeries {
        // 1 + c*y*t, order 3
        let mut s = TruncSeries::one(3);
        s.set_coeff(1, LaurentPoly::monomial(1, BigInt::from(c)));
        s
    }

    #[test]
    fn product_truncates_to_min_order() {
        let a = TruncSeries::one(5);
        let b = TruncSeries::one(2);
        assert_eq!((&a * &b).order(), 2);
    }

    #[test]
    fn multiplication_is_convolution() {
        let p = &lin(1) * &lin(-1); // (1 + yt)(1 - yt) = 1 - y^2 t^2
        assert_eq!(p.coeff(0), LaurentPoly::one());
        assert!(p.coeff(1).is_zero());
        assert_eq!(p.coeff(2), LaurentPoly::monomial(2, BigInt::from(-1)));
        assert!(p.coeff(3).is_zero());
    }
}

//! Specializations of the zeta function of a smooth projective curve of
//! genus `g` under the E and H_y ring homomorphisms, and y-genera of
//! symmetric powers of `C x P^{m-1}`.
//!
//! Everything here is a coefficient extraction from one of two closed
//! products:
//!
//! - at H_y level, `Z(C, t)` specializes to `(1-t)^{g-1} (1-yt)^{g-1}`, and
//!   `Z(C x P^{m-1}, t)` to the product of that with `t` replaced by
//!   `y^a t` for `a = 0..m-1`;
//! - at E level, `Z(C, t)` specializes to
//!   `(1-xt)^g (1-yt)^g / ((1-t)(1-xyt))`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{BivarPoly, LaurentPoly, TruncSeries};

/// A genus-`g` curve context; `g >= 2` is required because the slope
/// condition and the divisions in the genus formulas degenerate below that.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CurveContext {
    g: i64,
}

impl CurveContext {
    pub fn new(g: i64) -> Result<Self> {
        if g < 2 {
            return Err(Error::domain(format!("genus must be >= 2, got {g}")));
        }
        Ok(CurveContext { g })
    }

    pub fn genus(&self) -> i64 {
        self.g
    }
}

/// Expansion of `(1 - y^a t)^{g-1} (1 - y^{a+1} t)^{g-1}` to the given
/// truncation order. The full product is a polynomial of degree `2(g-1)`
/// in `t`, so coefficients above that vanish.
pub fn hy_zeta_series(ctx: &CurveContext, a: u32, order: usize) -> TruncSeries {
    let e = (ctx.g - 1) as u64;
    let factor = |exp: u32| -> TruncSeries {
        let mut s = TruncSeries::one(order);
        if order >= 1 {
            s.set_coeff(1, LaurentPoly::int_monomial(exp as i64, -1));
        }
        s.pow(e)
    };
    &factor(a) * &factor(a + 1)
}

/// `H_y(Sym^k(C x P^{m-1}))`: the coefficient of `t^k` in
/// `prod_{a=0}^{m-1} (1 - y^a t)^{g-1} (1 - y^{a+1} t)^{g-1}`.
///
/// Returns the zero polynomial whenever `k > 2m(g-1)`. Computed by
/// accumulating the linear factors one at a time (independently of
/// [`hy_zeta_series`], which the tests cross-check against).
pub fn hy_sym_cxp(ctx: &CurveContext, m: u32, k: u32) -> Result<LaurentPoly> {
    if m < 1 {
        return Err(Error::domain("hy_sym_cxp needs m >= 1"));
    }
    let k = k as usize;
    // t-coefficients 0..k of the running product.
    let mut coeffs = vec![LaurentPoly::zero(); k + 1];
    coeffs[0] = LaurentPoly::one();
    let g1 = (ctx.g - 1) as usize;
    for a in 0..m as i64 {
        for exp in [a, a + 1] {
            for _ in 0..g1 {
                // multiply by (1 - y^exp t)
                for j in (1..=k).rev() {
                    let shifted = coeffs[j - 1].mul_term(exp, &BigInt::from(-1));
                    coeffs[j] = &coeffs[j] + &shifted;
                }
            }
        }
    }
    Ok(coeffs.swap_remove(k))
}

/// `E(Sym^k C, x, y)`: the coefficient of `t^k` in
/// `(1-xt)^g (1-yt)^g / ((1-t)(1-xyt))`, computed by multiplying the
/// numerator expansion with the two geometric series.
pub fn e_zeta_coeff(ctx: &CurveContext, k: u32) -> BivarPoly {
    let g = ctx.g as u64;
    let k = k as i64;
    // Numerator t-coefficients: c_j = sum_{a+b=j} C(g,a) C(g,b) (-1)^j x^a y^b.
    let binom = binomial_row(g);
    let mut result = BivarPoly::zero();
    for j in 0..=(2 * g as i64).min(k) {
        let mut cj = BivarPoly::zero();
        for a in 0..=j {
            let b = j - a;
            if a > g as i64 || b > g as i64 {
                continue;
            }
            let mut c = &binom[a as usize] * &binom[b as usize];
            if j % 2 == 1 {
                c = -c;
            }
            cj.add_term(a, b, c);
        }
        // 1/((1-t)(1-xyt)) contributes sum_{i=0}^{k-j} (xy)^i at t^{k-j}.
        let mut geom = BivarPoly::zero();
        for i in 0..=(k - j) {
            geom.add_term(i, i, BigInt::one());
        }
        result = &result + &(&cj * &geom);
    }
    result
}

/// Row `n` of Pascal's triangle as exact integers.
fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = (row.last().unwrap() * BigInt::from(n - k)) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

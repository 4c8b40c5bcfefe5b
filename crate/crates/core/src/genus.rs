//! The y-genus of the moduli space of semistable PGL_n-Higgs bundles,
//! computed by three independent routes, plus the Euler characteristic,
//! the relation to the Picard-quotiented GL-side space, and the conversion
//! to the y-genus without supports.
//!
//! The three routes:
//!
//! - `Direct`: sum over divisors `m | n` of a prefactor times a sum over
//!   nonnegative gap tuples `(k_1, .., k_{q-1})`, `q = n/m`, constrained by
//!   `sum i*k_i = d (mod q)`, of products of y-genera of symmetric powers
//!   of `C x P^{m-1}`. Gaps are capped at `2m(g-1)` because those genera
//!   vanish beyond; the cap loses nothing.
//! - `RootSum`: the same congruence-constrained sum evaluated by the
//!   root-of-unity filter in the cyclic-group algebra of order `q`; the
//!   full sum over `l = 1..q` collapses to a scalar, which is asserted
//!   before extraction.
//! - `Closed`: the closed formula
//!   `y^N ((1-y^n)/(1-y))^{g-1} sum_{m|n} mu(m)/m (m prod_{j<n/m} (1-y^{jm})^2)^{g-1}`
//!   with `N = (n^2-1)(g-1)`, valid for `gcd(n, d) = 1`; the division by
//!   `(1-y)` is exact polynomial division.
//!
//! Rational factors like `mu(m)/m` are carried in rational-coefficient
//! values and must clear to integers at the end of each route; a surviving
//! denominator aborts as an internal invariant violation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::curve::{hy_sym_cxp, CurveContext};
use crate::error::{Error, Result};
use crate::exactalg::{divisors, moebius, GroupAlgElem, LaurentPoly, RatLaurent};

/// Input to the PGL-side genus computations.
///
/// `gcd(n, d) = 1` is required by the closed route only; the direct and
/// root-of-unity routes accept any degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PglInput {
    n: i64,
    d: i64,
    g: i64,
}

impl PglInput {
    pub fn new(n: i64, d: i64, g: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain(format!("rank must be >= 1, got {n}")));
        }
        if g < 2 {
            return Err(Error::domain(format!("genus must be >= 2, got {g}")));
        }
        Ok(PglInput { n, d, g })
    }

    pub fn rank(&self) -> i64 {
        self.n
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    pub fn genus(&self) -> i64 {
        self.g
    }

    /// `N = (n^2 - 1)(g - 1)`, half the dimension of the moduli space.
    pub fn half_dim(&self) -> i64 {
        (self.n * self.n - 1) * (self.g - 1)
    }

    pub fn coprime(&self) -> bool {
        self.n.gcd(&self.d) == 1
    }
}

/// Evaluation route selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Direct,
    RootSum,
    Closed,
}

/// A constant-rank gap tuple: `q` chain links of rank `m` with the `q - 1`
/// nonnegative degree gaps between them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GapTuple {
    m: i64,
    q: i64,
    gaps: Vec<i64>,
}

impl GapTuple {
    pub fn new(m: i64, q: i64, gaps: Vec<i64>) -> Result<Self> {
        if m < 1 || q < 1 {
            return Err(Error::domain("gap tuple needs m >= 1 and q >= 1"));
        }
        if gaps.len() + 1 != q as usize {
            return Err(Error::domain(format!(
                "gap tuple of q = {q} links needs {} gaps, got {}",
                q - 1,
                gaps.len()
            )));
        }
        if gaps.iter().any(|&k| k < 0) {
            return Err(Error::domain("gaps must be nonnegative"));
        }
        Ok(GapTuple { m, q, gaps })
    }

    pub fn rank(&self) -> i64 {
        self.m
    }

    pub fn links(&self) -> i64 {
        self.q
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }
}

/// `prod_{i=1}^{m-1} (1 - y^i)^{g-1} (1 - y^{i+1})^{g-1}` (1 for `m = 1`).
fn constant_rank_prefactor(g: i64, m: i64) -> LaurentPoly {
    let e = (g - 1) as u64;
    let mut acc = LaurentPoly::one();
    for i in 1..m {
        let a = &LaurentPoly::one() - &LaurentPoly::int_monomial(i, 1);
        let b = &LaurentPoly::one() - &LaurentPoly::int_monomial(i + 1, 1);
        acc = &acc * &(&a * &b).pow(e);
    }
    acc
}

/// The y-genus of the Picard-quotiented constant-rank chain stratum:
/// the prefactor for rank `m` times the product over the gaps of
/// `H_y(Sym^{k_i}(C x P^{m-1}))`.
pub fn pchain_hy(ctx: &CurveContext, tuple: &GapTuple) -> Result<LaurentPoly> {
    let mut acc = constant_rank_prefactor(ctx.genus(), tuple.m);
    for &k in &tuple.gaps {
        let k = u32::try_from(k).map_err(|_| Error::domain("gap exceeds u32 range"))?;
        let m = u32::try_from(tuple.m).map_err(|_| Error::domain("rank exceeds u32 range"))?;
        acc = &acc * &hy_sym_cxp(ctx, m, k)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Direct route: congruence-filtered gap-tuple sums over all divisors.
fn pgl_hy_direct(input: &PglInput) -> Result<LaurentPoly> {
    let ctx = CurveContext::new(input.g)?;
    let mut acc = LaurentPoly::zero();
    for m in divisors(input.n as u64)? {
        let m = m as i64;
        let q = input.n / m;
        let cap = 2 * m * (input.g - 1);
        let residue = input.d.rem_euclid(q);
        // Precompute the symmetric-power genera once per divisor.
        let mut sym = Vec::with_capacity(cap as usize + 1);
        for k in 0..=cap {
            sym.push(hy_sym_cxp(&ctx, m as u32, k as u32)?);
        }
        let mut divisor_sum = LaurentPoly::zero();
        let mut gaps = vec![0i64; (q - 1) as usize];
        'tuples: loop {
            let weighted: i64 = gaps.iter().enumerate().map(|(i, &k)| (i as i64 + 1) * k).sum();
            if weighted.rem_euclid(q) == residue {
                let mut term = LaurentPoly::one();
                for &k in &gaps {
                    term = &term * &sym[k as usize];
                    if term.is_zero() {
                        break;
                    }
                }
                divisor_sum = &divisor_sum + &term;
            }
            for slot in gaps.iter_mut() {
                *slot += 1;
                if *slot <= cap {
                    continue 'tuples;
                }
                *slot = 0;
            }
            break;
        }
        acc = &acc + &(&constant_rank_prefactor(input.g, m) * &divisor_sum);
    }
    Ok(acc.shift(input.half_dim()))
}

/// Root-of-unity route: the congruence filter becomes
/// `(m/n) sum_{l=1}^{q} zeta^{-ld} prod_{j<m} prod_{0<i<q}
/// ((1 - y^j zeta^{li})(1 - y^{j+1} zeta^{li}))^{g-1}` in the cyclic-group
/// algebra of order `q = n/m`, which collapses to a scalar.
fn pgl_hy_rootsum(input: &PglInput) -> Result<LaurentPoly> {
    let g1 = (input.g - 1) as u64;
    let mut acc = RatLaurent::zero();
    for m in divisors(input.n as u64)? {
        let m = m as i64;
        let q = (input.n / m) as usize;
        let mut orbit_sum = GroupAlgElem::zero(q);
        for l in 1..=q as i64 {
            let mut term = GroupAlgElem::root_power(q, -l * input.d);
            for j in 0..m {
                for i in 1..q as i64 {
                    let mut factor = GroupAlgElem::one(q);
                    for exp in [j, j + 1] {
                        let root = GroupAlgElem::term(q, l * i, LaurentPoly::int_monomial(exp, -1));
                        let binomial = &GroupAlgElem::one(q) + &root;
                        factor = &factor * &binomial.pow(g1);
                    }
                    term = &term * &factor;
                    if term.is_zero() {
                        break;
                    }
                }
            }
            orbit_sum = &orbit_sum + &term;
        }
        let scalar = orbit_sum.scalar_value()?;
        let weight = BigRational::new(BigInt::from(m), BigInt::from(input.n));
        let prefactor = constant_rank_prefactor(input.g, m).to_rational();
        acc = &acc + &(&prefactor * &scalar.to_rational()).scale(&weight);
    }
    let total = acc.try_into_integer()?;
    Ok(total.shift(input.half_dim()))
}

/// Closed route, valid for coprime `(n, d)`:
/// `y^N ((1-y^n)/(1-y))^{g-1} sum_{m|n} mu(m)/m (m prod_j (1-y^{jm})^2)^{g-1}`.
fn pgl_hy_closed(input: &PglInput) -> Result<LaurentPoly> {
    if !input.coprime() {
        return Err(Error::domain(format!(
            "n and d must be coprime for the closed method (got n = {}, d = {})",
            input.n, input.d
        )));
    }
    let g1 = (input.g - 1) as u64;
    let one = LaurentPoly::one();
    let ratio = (&one - &LaurentPoly::int_monomial(input.n, 1)).div_exact(
        &(&one - &LaurentPoly::int_monomial(1, 1)),
    )?;
    let mut sum = RatLaurent::zero();
    for m in divisors(input.n as u64)? {
        let m = m as i64;
        let q = input.n / m;
        let mut inner = LaurentPoly::constant(BigInt::from(m));
        for j in 1..q {
            let factor = &one - &LaurentPoly::int_monomial(j * m, 1);
            inner = &inner * &factor.pow(2);
        }
        let weight = BigRational::new(BigInt::from(moebius(m as u64)?), BigInt::from(m));
        sum = &sum + &inner.pow(g1).to_rational().scale(&weight);
    }
    let total = (&ratio.pow(g1).to_rational() * &sum).try_into_integer()?;
    Ok(total.shift(input.half_dim()))
}

/// The compactly supported y-genus of the rank-`n`, degree-`d` PGL-Higgs
/// moduli space, by the chosen route. All routes return an
/// integer-coefficient Laurent polynomial and agree wherever defined.
pub fn pgl_hy(input: &PglInput, method: Method) -> Result<LaurentPoly> {
    match method {
        Method::Direct => pgl_hy_direct(input),
        Method::RootSum => pgl_hy_rootsum(input),
        Method::Closed => pgl_hy_closed(input),
    }
}

/// Euler characteristic: the closed form at `y = 1`, which collapses to
/// `mu(n) * n^{2g-3}`.
pub fn euler_pgl(n: i64, g: i64) -> Result<BigInt> {
    let input = PglInput::new(n, 1, g)?;
    Ok(pgl_hy_closed(&input)?.eval_one())
}

/// The compactly supported y-genus of the Picard-quotiented GL-side space:
/// `y^g` times the PGL genus.
pub fn pm_gl_hy(input: &PglInput) -> Result<LaurentPoly> {
    Ok(pgl_hy_closed(input)?.shift(input.g))
}

/// Convert a compactly supported y-genus of a `2N`-dimensional space to the
/// y-genus without supports: `(-y)^{2N} P(-1/y)`, i.e. each term `c y^e`
/// maps to `c (-1)^e y^{2N - e}`.
pub fn noncompact_ygenus(p: &LaurentPoly, half_dim: i64) -> LaurentPoly {
    p.reverse_signed(half_dim)
}

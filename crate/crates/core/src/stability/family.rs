//! Emptiness ray families: for each datum, a direction `delta` such that the
//! shifted parameters `alpha + t * delta` keep the gap condition for all
//! `t >= 0` while the semistable locus empties out (non-constant ranks) or
//! reaches the explicitly computable large-parameter regime (constant ranks).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{satisfies_star, slope};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    /// Ranks tail strictly below the last change: for `t > t0` the window
    /// condition on the final rank drop fails, so the locus is empty.
    ShrinkingTail,
    /// Ranks tail strictly above the last change; dual situation.
    GrowingTail,
    /// Constant ranks: for `t > t0` every parameter gap exceeds the
    /// corresponding nonnegative degree gap `d_{i-1} - d_i`.
    ConstantRank,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GoodAlphaFamily {
    pub delta: Vec<i64>,
    pub t0: BigRational,
    pub kind: FamilyKind,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The ray direction and threshold for the given datum. The parameter must
/// satisfy the gap condition `alpha_i - alpha_{i-1} >= 2g - 2` (checked
/// against `g`); the returned `delta` is non-decreasing, so the whole ray
/// keeps it.
pub fn goodalpha_family(
    ranks: &[i64],
    degrees: &[i64],
    alpha: &[BigRational],
    g: i64,
) -> Result<GoodAlphaFamily> {
    if ranks.is_empty() || ranks.len() != degrees.len() || ranks.len() != alpha.len() {
        return Err(Error::domain(
            "ray family needs nonempty vectors of equal length",
        ));
    }
    if !satisfies_star(alpha, g) {
        return Err(Error::domain(
            "stability parameter violates the gap condition",
        ));
    }
    let r = ranks.len() - 1;

    if ranks.iter().all(|&n| n == ranks[0]) {
        // delta_i = i; least t0 with alpha_{t,i} - alpha_{t,i-1} > d_{i-1} - d_i
        // for all i and all t > t0.
        let delta: Vec<i64> = (0..=r as i64).collect();
        let mut t0 = BigRational::zero();
        for i in 1..=r {
            let gap = rat(degrees[i - 1] - degrees[i]) - (&alpha[i] - &alpha[i - 1]);
            if gap > t0 {
                t0 = gap;
            }
        }
        return Ok(GoodAlphaFamily {
            delta,
            t0,
            kind: FamilyKind::ConstantRank,
        });
    }

    // Last index where the rank changes: n_r = ... = n_{k+1} != n_k.
    let k = (0..r).rev().find(|&i| ranks[i] != ranks[r]).expect("non-constant");
    let total_rank: i64 = ranks.iter().sum();
    let mu0 = slope(ranks, degrees, alpha)?;

    if ranks[r] < ranks[k] {
        // Case 1: delta = (0..0, 1..1); the window condition at (k, k+1)
        // reads mu_t <= (d_k - d_{k+1})/(n_k - n_{k+1}) + alpha_k with a
        // t-independent right hand side, while mu_t increases.
        let delta: Vec<i64> = (0..=r).map(|i| i64::from(i > k)).collect();
        let bound = rat(degrees[k] - degrees[k + 1]) / rat(ranks[k] - ranks[k + 1])
            + alpha[k].clone();
        let growth: i64 = ranks[k + 1..].iter().sum();
        let t_star = (bound - mu0) * rat(total_rank) / rat(growth);
        Ok(GoodAlphaFamily {
            delta,
            t0: t_star.max(BigRational::zero()),
            kind: FamilyKind::ShrinkingTail,
        })
    } else {
        // Case 2: delta = (-1..-1, 0..0); the dual window condition at
        // (k, k+1) reads (d_{k+1} - d_k)/(n_{k+1} - n_k) + alpha_{k+1}
        // <= mu_t with a t-independent left hand side, while mu_t decreases.
        let delta: Vec<i64> = (0..=r).map(|i| -i64::from(i <= k)).collect();
        let bound = rat(degrees[k + 1] - degrees[k]) / rat(ranks[k + 1] - ranks[k])
            + alpha[k + 1].clone();
        let decay: i64 = ranks[..=k].iter().sum();
        let t_star = (mu0 - bound) * rat(total_rank) / rat(decay);
        Ok(GoodAlphaFamily {
            delta,
            t0: t_star.max(BigRational::zero()),
            kind: FamilyKind::GrowingTail,
        })
    }
}

/// The shifted parameter `alpha + t * delta`.
pub(crate) fn shifted_alpha(alpha: &[BigRational], delta: &[i64], t: &BigRational) -> Vec<BigRational> {
    alpha
        .iter()
        .zip(delta)
        .map(|(a, &d)| a + t * rat(d))
        .collect()
}

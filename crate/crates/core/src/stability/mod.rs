//! Chain stability combinatorics: slopes, the parameter condition on
//! consecutive gaps, necessary existence conditions, finite admissible-degree
//! enumeration, emptiness ray families and wall detection.
//!
//! Stability parameters are exact rationals throughout; every wall and
//! threshold is the solution of a linear equation with integer data, so all
//! comparisons are exact.
//!
//! Indexing convention: a chain datum lists `(n_i, d_i, alpha_i)` for
//! `i = 0..r`, the maps running from slot `i` down to slot `i-1`. On
//! equal-rank steps the degree has to drop, so nonnegative degree gaps are
//! `d_{i-1} - d_i`.

mod conditions;
mod family;
mod polytope;
mod walls;

pub use conditions::{necessary_conditions, ConditionFailure, ConditionId, ConditionReport, Witness};
pub use family::{goodalpha_family, FamilyKind, GoodAlphaFamily};
pub use polytope::enumerate_admissible_degrees;
pub use walls::{equal_slope_decompositions, find_walls, SubDatum, Wall, WallReport};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A rank vector, degree vector and rational stability parameter of common
/// length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainDatum {
    ranks: Vec<i64>,
    degrees: Vec<i64>,
    alpha: Vec<BigRational>,
}

impl ChainDatum {
    pub fn new(ranks: Vec<i64>, degrees: Vec<i64>, alpha: Vec<BigRational>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::domain("chain datum must be nonempty"));
        }
        if ranks.len() != degrees.len() || ranks.len() != alpha.len() {
            return Err(Error::domain(format!(
                "mismatched lengths: {} ranks, {} degrees, {} stability entries",
                ranks.len(),
                degrees.len(),
                alpha.len()
            )));
        }
        if let Some(bad) = ranks.iter().find(|&&n| n < 1) {
            return Err(Error::domain(format!("ranks must be positive, got {bad}")));
        }
        Ok(ChainDatum {
            ranks,
            degrees,
            alpha,
        })
    }

    /// Number of entries, `r + 1`; never zero for a constructed datum.
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn ranks(&self) -> &[i64] {
        &self.ranks
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn alpha(&self) -> &[BigRational] {
        &self.alpha
    }

    /// Total slope of the datum.
    pub fn total_slope(&self) -> BigRational {
        slope(&self.ranks, &self.degrees, &self.alpha).expect("valid datum")
    }

    /// The dual datum `(n_i, d_i, alpha_i) -> (n_{r-i}, -d_{r-i}, -alpha_{r-i})`.
    /// This is an involution and preserves strict increase of the parameter.
    pub fn dual(&self) -> ChainDatum {
        ChainDatum {
            ranks: self.ranks.iter().rev().copied().collect(),
            degrees: self.degrees.iter().rev().map(|d| -d).collect(),
            alpha: self.alpha.iter().rev().map(|a| -a).collect(),
        }
    }

    /// `Err(Domain)` unless `alpha_0 < alpha_1 < ... < alpha_r`.
    pub fn require_alpha_increasing(&self) -> Result<()> {
        require_strictly_increasing(&self.alpha)
    }
}

pub(crate) fn require_strictly_increasing(alpha: &[BigRational]) -> Result<()> {
    for w in alpha.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::domain(
                "stability parameter must be strictly increasing",
            ));
        }
    }
    Ok(())
}

/// Exact slope `(sum d_i + alpha_i n_i) / (sum n_i)`.
pub fn slope(ranks: &[i64], degrees: &[i64], alpha: &[BigRational]) -> Result<BigRational> {
    if ranks.is_empty() || ranks.len() != degrees.len() || ranks.len() != alpha.len() {
        return Err(Error::domain("slope needs nonempty vectors of equal length"));
    }
    let mut num = BigRational::zero();
    let mut den = BigInt::zero();
    for ((&n, &d), a) in ranks.iter().zip(degrees).zip(alpha) {
        num += BigRational::from_integer(BigInt::from(d)) + a * BigRational::from_integer(n.into());
        den += BigInt::from(n);
    }
    if den.is_zero() {
        return Err(Error::domain("slope needs positive total rank"));
    }
    Ok(num / BigRational::from_integer(den))
}

/// True iff every consecutive gap satisfies `alpha_i - alpha_{i-1} >= 2g - 2`.
pub fn satisfies_star(alpha: &[BigRational], g: i64) -> bool {
    let bound = BigRational::from_integer(BigInt::from(2 * g - 2));
    alpha.windows(2).all(|w| &w[1] - &w[0] >= bound.clone())
}

/// The Higgs stability parameter `(0, 2g-2, ..., r(2g-2))`; it satisfies the
/// gap condition with equality in every step.
pub fn higgs_alpha(r: usize, g: i64) -> Result<Vec<BigRational>> {
    if g < 2 {
        return Err(Error::domain(format!("genus must be >= 2, got {g}")));
    }
    Ok((0..=r as i64)
        .map(|i| BigRational::from_integer(BigInt::from(i * (2 * g - 2))))
        .collect())
}

/// All compositions of `n` into positive parts (every length `1..=n`),
/// in lexicographic order by (length, parts).
pub(crate) fn compositions(n: i64) -> Vec<Vec<i64>> {
    fn go(remaining: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=remaining {
            prefix.push(part);
            go(remaining - part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out.sort_by_key(|c| (c.len(), c.clone()));
    out
}

/// The finite index set of chain data contributing to rank-`n`, degree-`d`
/// Higgs moduli: all compositions `ranks` of `n` together with all
/// admissible degree vectors whose weighted total
/// `sum (d_i + i(2g-2) n_i)` equals `d`, at the Higgs parameter.
///
/// Sorted lexicographically by (length, ranks, degrees).
pub fn higgs_index_set(n: i64, d: i64, g: i64) -> Result<Vec<(Vec<i64>, Vec<i64>)>> {
    if n < 1 {
        return Err(Error::domain(format!("rank must be >= 1, got {n}")));
    }
    if g < 2 {
        return Err(Error::domain(format!("genus must be >= 2, got {g}")));
    }
    let mut out = Vec::new();
    for ranks in compositions(n) {
        let r = ranks.len() - 1;
        let alpha = higgs_alpha(r, g)?;
        // sum_i (d_i + i(2g-2) n_i) = d pins the plain total degree.
        let weighted: i64 = ranks
            .iter()
            .enumerate()
            .map(|(i, &ni)| i as i64 * (2 * g - 2) * ni)
            .sum();
        let total = d - weighted;
        for degrees in enumerate_admissible_degrees(&ranks, &alpha, total)? {
            out.push((ranks.clone(), degrees));
        }
    }
    out.sort_by(|a, b| {
        (a.0.len(), &a.0, &a.1).cmp(&(b.0.len(), &b.0, &b.1))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    pub(crate) fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().copied().map(rat).collect()
    }

    #[test]
    fn slope_examples() {
        assert_eq!(slope(&[1, 1], &[0, 0], &rats(&[0, 2])).unwrap(), rat(1));
        assert_eq!(slope(&[2, 1], &[1, 0], &rats(&[0, 2])).unwrap(), rat(1));
        assert_eq!(slope(&[1], &[5], &rats(&[0])).unwrap(), rat(5));
        assert!(slope(&[], &[], &[]).is_err());
    }

    #[test]
    fn star_examples() {
        assert!(satisfies_star(&rats(&[0, 2]), 2));
        assert!(!satisfies_star(&rats(&[0, 1]), 2));
        assert!(satisfies_star(&rats(&[0]), 7));
    }

    #[test]
    fn higgs_alpha_examples() {
        assert_eq!(higgs_alpha(0, 3).unwrap(), rats(&[0]));
        assert_eq!(higgs_alpha(2, 2).unwrap(), rats(&[0, 2, 4]));
        assert_eq!(higgs_alpha(1, 3).unwrap(), rats(&[0, 4]));
        assert!(higgs_alpha(2, 1).is_err());
    }

    #[test]
    fn higgs_alpha_meets_star_with_equality() {
        for g in 2..=5 {
            for r in 0..=4 {
                assert!(satisfies_star(&higgs_alpha(r, g).unwrap(), g));
            }
        }
    }

    #[test]
    fn datum_validation() {
        assert!(ChainDatum::new(vec![], vec![], vec![]).is_err());
        assert!(ChainDatum::new(vec![1], vec![0, 1], rats(&[0])).is_err());
        assert!(ChainDatum::new(vec![0], vec![0], rats(&[0])).is_err());
        let d = ChainDatum::new(vec![2, 1], vec![1, 0], rats(&[0, 2])).unwrap();
        assert_eq!(d.total_slope(), rat(1));
    }

    #[test]
    fn dual_is_an_involution() {
        let d = ChainDatum::new(vec![2, 1, 3], vec![1, 0, -2], rats(&[0, 2, 5])).unwrap();
        assert_eq!(d.dual().dual(), d);
        d.dual().require_alpha_increasing().unwrap();
    }

    #[test]
    fn compositions_are_complete_and_sorted() {
        let c3 = compositions(3);
        assert_eq!(
            c3,
            vec![
                vec![3],
                vec![1, 2],
                vec![2, 1],
                vec![1, 1, 1],
            ]
        );
        assert_eq!(compositions(5).len(), 16);
    }

    #[test]
    fn higgs_index_set_rank_one() {
        assert_eq!(
            higgs_index_set(1, 0, 2).unwrap(),
            vec![(vec![1], vec![0])]
        );
    }

    #[test]
    fn higgs_index_set_rank_two() {
        assert_eq!(
            higgs_index_set(2, 1, 2).unwrap(),
            vec![(vec![2], vec![1]), (vec![1, 1], vec![0, -1])]
        );
    }

    #[test]
    fn higgs_index_set_rank_two_genus_three() {
        // For ranks (1,1) the weighted total forces e_0 + e_1 = -3; the
        // admissible set at the Higgs parameter (0, 4) is fixed by the
        // brute-force box oracle.
        let got = higgs_index_set(2, 1, 3).unwrap();
        assert_eq!(got[0], (vec![2], vec![1]));
        let pairs: Vec<_> = got.iter().skip(1).collect();
        let alpha = higgs_alpha(1, 3).unwrap();
        let mut brute = Vec::new();
        for e0 in -10..=10i64 {
            let e1 = -3 - e0;
            let datum = ChainDatum::new(vec![1, 1], vec![e0, e1], alpha.clone()).unwrap();
            if necessary_conditions(&datum).unwrap().passed() {
                brute.push((vec![1, 1], vec![e0, e1]));
            }
        }
        assert_eq!(
            pairs,
            brute.iter().collect::<Vec<_>>(),
            "admissible (1,1)-degrees at genus 3"
        );
        for (_, degs) in pairs {
            assert_eq!(degs.iter().sum::<i64>(), -3);
        }
    }
}

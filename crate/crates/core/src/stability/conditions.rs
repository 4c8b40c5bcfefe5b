//! The four necessary conditions for a semistable chain of given numerical
//! data to exist, evaluated in exact rational arithmetic.
//!
//! With `mu` the total slope, the conditions are:
//!
//! - C1: every prefix `0..=j` (`j < r`) has slope `<= mu`;
//! - C2: on equal-rank steps `n_j = n_{j-1}`, `d_j / n_j <= d_{j-1} / n_{j-1}`;
//! - C3: for every window `k < j` with `n_j < min(n_k..n_{j-1})`, the chain
//!   with slots `k..=j` replaced by `(n_j, d_j)` repeated has slope `<= mu`;
//! - C4: evaluated as C3 on the dual datum (reversal with negated degrees
//!   and parameters), which amounts to: for every window `k < j` with
//!   `n_k < min(n_{k+1}..n_j)`, the chain with slots `k..=j` replaced by
//!   `(n_k, d_k)` repeated has slope `>= mu`. The direct fraction form of
//!   this condition can have a non-positive denominator when intermediate
//!   ranks dip below `n_k`; the dual route never does.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ChainDatum;
use crate::error::Result;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ConditionId {
    C1,
    C2,
    C3,
    C4,
}

impl ConditionId {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConditionId::C1 => "C1",
            ConditionId::C2 => "C2",
            ConditionId::C3 => "C3",
            ConditionId::C4 => "C4",
        }
    }
}

/// Witness indices of a failed condition: `(j)` for C1/C2, `(k, j)` for
/// C3/C4.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Witness {
    Index(usize),
    Pair(usize, usize),
}

/// One violated inequality `lhs <= rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConditionFailure {
    pub condition: ConditionId,
    pub witness: Witness,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// Structured verdict of the necessary conditions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ConditionReport {
    pub failures: Vec<ConditionFailure>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Weighted degree `d_i + alpha_i * n_i` summed over `indices`.
fn weighted_sum(datum: &ChainDatum, indices: impl Iterator<Item = usize>) -> (BigRational, i64) {
    let mut num = BigRational::from_integer(BigInt::from(0));
    let mut rank = 0i64;
    for i in indices {
        num += rat(datum.degrees()[i]) + datum.alpha()[i].clone() * rat(datum.ranks()[i]);
        rank += datum.ranks()[i];
    }
    (num, rank)
}

/// Slope of the chain with slots `k..=j` replaced by `(rank, degree)`
/// repeated `j - k + 1` times, the parameter kept as is.
fn window_replaced_slope(datum: &ChainDatum, k: usize, j: usize, rank: i64, degree: i64) -> BigRational {
    let r = datum.len() - 1;
    let (mut num, mut den) = weighted_sum(datum, (0..=r).filter(|i| *i < k || *i > j));
    for i in k..=j {
        num += rat(degree) + datum.alpha()[i].clone() * rat(rank);
        den += rank;
    }
    num / rat(den)
}

/// Failures of C3 alone, reported as `(k, j, lhs, rhs)` with the condition
/// being `lhs <= rhs`.
fn c3_failures(datum: &ChainDatum, mu: &BigRational) -> Vec<(usize, usize, BigRational, BigRational)> {
    let r = datum.len() - 1;
    let ranks = datum.ranks();
    let mut out = Vec::new();
    for j in 1..=r {
        let mut window_min = ranks[j - 1];
        for k in (0..j).rev() {
            window_min = window_min.min(ranks[k]);
            if ranks[j] < window_min {
                let lhs = window_replaced_slope(datum, k, j, ranks[j], datum.degrees()[j]);
                if &lhs > mu {
                    out.push((k, j, lhs, mu.clone()));
                }
            }
        }
    }
    out
}

/// Evaluate the necessary conditions; the parameter must be strictly
/// increasing. All failures are returned with witnesses, in canonical
/// (condition, witness) order.
pub fn necessary_conditions(datum: &ChainDatum) -> Result<ConditionReport> {
    datum.require_alpha_increasing()?;
    let r = datum.len() - 1;
    let mu = datum.total_slope();
    let mut failures = Vec::new();

    // C1: prefix slopes.
    for j in 0..r {
        let (num, rank) = weighted_sum(datum, 0..=j);
        let lhs = num / rat(rank);
        if lhs > mu {
            failures.push(ConditionFailure {
                condition: ConditionId::C1,
                witness: Witness::Index(j),
                lhs,
                rhs: mu.clone(),
            });
        }
    }

    // C2: equal-rank steps.
    for j in 1..=r {
        if datum.ranks()[j] == datum.ranks()[j - 1] {
            let lhs = rat(datum.degrees()[j]) / rat(datum.ranks()[j]);
            let rhs = rat(datum.degrees()[j - 1]) / rat(datum.ranks()[j - 1]);
            if lhs > rhs {
                failures.push(ConditionFailure {
                    condition: ConditionId::C2,
                    witness: Witness::Index(j),
                    lhs,
                    rhs,
                });
            }
        }
    }

    // C3 directly.
    for (k, j, lhs, rhs) in c3_failures(datum, &mu) {
        failures.push(ConditionFailure {
            condition: ConditionId::C3,
            witness: Witness::Pair(k, j),
            lhs,
            rhs,
        });
    }

    // C4 as C3 of the dual datum; a dual witness (k', j') pulls back to
    // (r-j', r-k'), and the dual inequality lhs' <= rhs' negates into
    // -rhs' <= -lhs'.
    let dual = datum.dual();
    let dual_mu = dual.total_slope();
    for (k, j, lhs, rhs) in c3_failures(&dual, &dual_mu) {
        failures.push(ConditionFailure {
            condition: ConditionId::C4,
            witness: Witness::Pair(r - j, r - k),
            lhs: -rhs,
            rhs: -lhs,
        });
    }

    failures.sort_by(|a, b| (a.condition, a.witness).cmp(&(b.condition, b.witness)));
    Ok(ConditionReport { failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&n| rat(n)).collect()
    }

    fn datum(ranks: &[i64], degrees: &[i64], alpha: &[i64]) -> ChainDatum {
        ChainDatum::new(ranks.to_vec(), degrees.to_vec(), rats(alpha)).unwrap()
    }

    #[test]
    fn single_slot_always_passes() {
        let rep = necessary_conditions(&datum(&[1], &[17], &[0])).unwrap();
        assert!(rep.passed());
        let rep = necessary_conditions(&datum(&[3], &[-5], &[2])).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn c2_failure_with_witness() {
        let rep = necessary_conditions(&datum(&[1, 1], &[0, 1], &[0, 2])).unwrap();
        assert!(!rep.passed());
        assert_eq!(rep.failures.len(), 1);
        let f = &rep.failures[0];
        assert_eq!(f.condition, ConditionId::C2);
        assert_eq!(f.witness, Witness::Index(1));
        assert_eq!(f.lhs, rat(1));
        assert_eq!(f.rhs, rat(0));
    }

    #[test]
    fn c1_failure_with_witness() {
        let rep = necessary_conditions(&datum(&[1, 1], &[3, -3], &[0, 2])).unwrap();
        let c1: Vec<_> = rep
            .failures
            .iter()
            .filter(|f| f.condition == ConditionId::C1)
            .collect();
        assert_eq!(c1.len(), 1);
        assert_eq!(c1[0].witness, Witness::Index(0));
        assert_eq!(c1[0].lhs, rat(3));
        assert_eq!(c1[0].rhs, rat(1));
    }

    #[test]
    fn non_increasing_alpha_is_a_domain_error() {
        let d = datum(&[1, 1], &[0, 0], &[2, 2]);
        assert!(necessary_conditions(&d).is_err());
    }

    #[test]
    fn c3_window_detection() {
        // ranks (2,1): C3 applies at (k,j) = (0,1); replacing slot 0 by
        // (1, d_1) gives slope (2 d_1 + alpha-part)/2.
        let rep = necessary_conditions(&datum(&[2, 1], &[-3, 2], &[0, 2])).unwrap();
        assert!(rep
            .failures
            .iter()
            .any(|f| f.condition == ConditionId::C3 && f.witness == Witness::Pair(0, 1)));
    }

    #[test]
    fn c4_matches_direct_fraction_where_denominator_positive() {
        // For windows with n_k < min(n_{k+1}..n_j) the direct fraction
        // sum(d_i - d_k + alpha_i (n_i - n_k)) / sum(n_i - n_k) <= mu
        // is equivalent to the implemented dual-C3 condition.
        let data = [
            datum(&[1, 2], &[0, 0], &[0, 2]),
            datum(&[1, 3, 2], &[2, -1, 0], &[0, 2, 4]),
            datum(&[1, 2, 3], &[5, -2, 1], &[-1, 1, 4]),
            datum(&[2, 3, 3], &[0, -4, 2], &[0, 3, 6]),
        ];
        for d in &data {
            let r = d.len() - 1;
            let mu = d.total_slope();
            let rep = necessary_conditions(d).unwrap();
            for k in 0..r {
                for j in (k + 1)..=r {
                    let applies = (k + 1..=j).all(|i| d.ranks()[i] > d.ranks()[k]);
                    if !applies {
                        continue;
                    }
                    let mut num = BigRational::zero();
                    let mut den = 0i64;
                    for i in (k + 1)..=j {
                        num += rat(d.degrees()[i] - d.degrees()[k])
                            + d.alpha()[i].clone() * rat(d.ranks()[i] - d.ranks()[k]);
                        den += d.ranks()[i] - d.ranks()[k];
                    }
                    assert!(den > 0);
                    let fraction_fails = num / rat(den) > mu;
                    let reported = rep.failures.iter().any(|f| {
                        f.condition == ConditionId::C4 && f.witness == Witness::Pair(k, j)
                    });
                    assert_eq!(fraction_fails, reported, "window ({k},{j}) of {d:?}");
                }
            }
        }
    }
}

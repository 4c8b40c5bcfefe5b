//! Wall detection along stability-parameter rays and equal-slope
//! decompositions at a fixed parameter.
//!
//! A wall of the ray `alpha_t = alpha + t * delta` on `(0, t_max]` is a
//! value of `t` at which some proper sub-datum matches the total slope
//! exactly. Slope equalities that hold identically in `t` do not single out
//! a point of the ray and are not reported as walls.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::family::shifted_alpha;
use super::polytope::enumerate_admissible_degrees;
use super::ChainDatum;
use crate::error::{Error, Result};

/// A sub-datum witnessing a wall: full-length rank and degree vectors with
/// zeros off the support.
pub type SubDatum = (Vec<i64>, Vec<i64>);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Wall {
    pub t: BigRational,
    pub witnesses: Vec<SubDatum>,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WallReport {
    /// Walls in strictly ascending `t`.
    pub walls: Vec<Wall>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// All nonzero vectors componentwise between 0 and `limit`.
fn nonzero_subvectors(limit: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cursor = vec![0i64; limit.len()];
    'outer: loop {
        if cursor.iter().any(|&m| m > 0) {
            out.push(cursor.clone());
        }
        for i in 0..limit.len() {
            cursor[i] += 1;
            if cursor[i] <= limit[i] {
                continue 'outer;
            }
            cursor[i] = 0;
        }
        return out;
    }
}

/// All proper sub-rank vectors: componentwise `0 <= m_i <= n_i`, excluding
/// the zero vector and the full vector.
pub(crate) fn proper_sub_ranks(ranks: &[i64]) -> Vec<Vec<i64>> {
    nonzero_subvectors(ranks)
        .into_iter()
        .filter(|m| m != ranks)
        .collect()
}

/// Detect every wall of the ray on `(0, t_max]`.
///
/// The parameter must be strictly increasing along the whole interval,
/// which for affine gaps is guaranteed by the endpoint checks
/// `gap(0) >= 0` and `gap(t_max) > 0`. Candidate sub-degrees for each
/// sub-rank vector come from the admissibility enumeration at the exact
/// wall parameter, so every reported witness passes the necessary
/// conditions there.
pub fn find_walls(
    ranks: &[i64],
    degrees: &[i64],
    alpha: &[BigRational],
    delta: &[i64],
    t_max: &BigRational,
) -> Result<WallReport> {
    if ranks.is_empty()
        || ranks.len() != degrees.len()
        || ranks.len() != alpha.len()
        || ranks.len() != delta.len()
    {
        return Err(Error::domain(
            "wall search needs nonempty vectors of equal length",
        ));
    }
    if let Some(bad) = ranks.iter().find(|&&n| n < 1) {
        return Err(Error::domain(format!("ranks must be positive, got {bad}")));
    }
    if !t_max.is_positive() {
        return Err(Error::domain("t_max must be positive"));
    }
    // Strict increase on (0, t_max], checked at the endpoints.
    for i in 1..ranks.len() {
        let gap0 = &alpha[i] - &alpha[i - 1];
        let gap1 = &gap0 + rat(delta[i] - delta[i - 1]) * t_max.clone();
        if gap0.is_negative() || !gap1.is_positive() {
            return Err(Error::domain(
                "parameter ray must be strictly increasing on the whole interval",
            ));
        }
    }

    let total_rank: i64 = ranks.iter().sum();
    // Full slope as an affine function of t: (c + t*d) / R.
    let full_c = rat(degrees.iter().sum::<i64>())
        + ranks
            .iter()
            .zip(alpha)
            .map(|(&n, a)| a * rat(n))
            .sum::<BigRational>();
    let full_d: i64 = ranks.iter().zip(delta).map(|(&n, &d)| n * d).sum();

    let mut walls: BTreeMap<BigRational, Vec<SubDatum>> = BTreeMap::new();

    for sub in proper_sub_ranks(ranks) {
        let support: Vec<usize> = (0..sub.len()).filter(|&i| sub[i] > 0).collect();
        let sub_rank: i64 = sub.iter().sum();
        let alpha_part: BigRational = support
            .iter()
            .map(|&i| alpha[i].clone() * rat(sub[i]))
            .sum();
        let delta_part: i64 = support.iter().map(|&i| delta[i] * sub[i]).sum();

        // Slope equality pins the sub-total degree as an affine function
        // of t: E(t) = sub_rank*(c + t d)/R - alpha_part - t*delta_part.
        let e_const = rat(sub_rank) * full_c.clone() / rat(total_rank) - alpha_part;
        let e_slope = rat(sub_rank * full_d) / rat(total_rank) - rat(delta_part);
        if e_slope.is_zero() {
            // Slope equality is t-independent on this sub-rank; no wall.
            continue;
        }
        let e_at_0 = e_const.clone();
        let e_at_max = &e_const + &e_slope * t_max.clone();
        let (e_lo, e_hi) = if e_at_0 <= e_at_max {
            (e_at_0, e_at_max)
        } else {
            (e_at_max, e_at_0)
        };
        let lo = i64::try_from(&e_lo.ceil().to_integer())
            .map_err(|_| Error::internal("wall scan bound exceeds integer range"))?;
        let hi = i64::try_from(&e_hi.floor().to_integer())
            .map_err(|_| Error::internal("wall scan bound exceeds integer range"))?;

        for e_total in lo..=hi {
            let t = (rat(e_total) - &e_const) / e_slope.clone();
            if !t.is_positive() || &t > t_max {
                continue;
            }
            let alpha_t = shifted_alpha(alpha, delta, &t);
            let sub_ranks_s: Vec<i64> = support.iter().map(|&i| sub[i]).collect();
            let sub_alpha_s: Vec<BigRational> =
                support.iter().map(|&i| alpha_t[i].clone()).collect();
            for degs in enumerate_admissible_degrees(&sub_ranks_s, &sub_alpha_s, e_total)? {
                let mut full_degs = vec![0i64; sub.len()];
                for (slot, &i) in support.iter().enumerate() {
                    full_degs[i] = degs[slot];
                }
                walls
                    .entry(t.clone())
                    .or_default()
                    .push((sub.clone(), full_degs));
            }
        }
    }

    let walls = walls
        .into_iter()
        .map(|(t, mut witnesses)| {
            witnesses.sort();
            witnesses.dedup();
            Wall { t, witnesses }
        })
        .collect();
    Ok(WallReport { walls })
}

/// All ordered tuples of `h >= 2` proper sub-data that sum componentwise to
/// the given datum, each passing the necessary conditions at `alpha` and
/// each having slope exactly the total slope. Sorted canonically.
pub fn equal_slope_decompositions(
    ranks: &[i64],
    degrees: &[i64],
    alpha: &[BigRational],
) -> Result<Vec<Vec<SubDatum>>> {
    let datum = ChainDatum::new(ranks.to_vec(), degrees.to_vec(), alpha.to_vec())?;
    datum.require_alpha_increasing()?;
    let mu = datum.total_slope();

    // Admissible degree lists per sub-rank vector, with the sub-total
    // pinned by the slope equality; `None` when the pinned total is not an
    // integer or nothing is admissible.
    let mut piece_cache: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
    let mut piece_options = |sub: &[i64]| -> Result<Vec<Vec<i64>>> {
        if let Some(hit) = piece_cache.get(sub) {
            return Ok(hit.clone());
        }
        let support: Vec<usize> = (0..sub.len()).filter(|&i| sub[i] > 0).collect();
        let sub_rank: i64 = sub.iter().sum();
        let alpha_part: BigRational = support
            .iter()
            .map(|&i| alpha[i].clone() * rat(sub[i]))
            .sum();
        let pinned = mu.clone() * rat(sub_rank) - alpha_part;
        let mut options = Vec::new();
        if pinned.is_integer() {
            if let Ok(total) = i64::try_from(&pinned.to_integer()) {
                let sub_ranks_s: Vec<i64> = support.iter().map(|&i| sub[i]).collect();
                let sub_alpha_s: Vec<BigRational> =
                    support.iter().map(|&i| alpha[i].clone()).collect();
                for degs in enumerate_admissible_degrees(&sub_ranks_s, &sub_alpha_s, total)? {
                    let mut full = vec![0i64; sub.len()];
                    for (slot, &i) in support.iter().enumerate() {
                        full[i] = degs[slot];
                    }
                    options.push(full);
                }
            }
        }
        piece_cache.insert(sub.to_vec(), options.clone());
        Ok(options)
    };

    // Ordered compositions of the rank vector into h >= 2 nonzero parts.
    fn rank_splits(remaining: &[i64], parts: &mut Vec<Vec<i64>>, out: &mut Vec<Vec<Vec<i64>>>) {
        if remaining.iter().all(|&x| x == 0) {
            if parts.len() >= 2 {
                out.push(parts.clone());
            }
            return;
        }
        for part in nonzero_subvectors(remaining) {
            let rest: Vec<i64> = remaining.iter().zip(&part).map(|(r, c)| r - c).collect();
            parts.push(part);
            rank_splits(&rest, parts, out);
            parts.pop();
        }
    }

    let mut splits = Vec::new();
    rank_splits(ranks, &mut Vec::new(), &mut splits);

    let mut out: Vec<Vec<SubDatum>> = Vec::new();
    'split: for split in splits {
        let mut option_lists = Vec::with_capacity(split.len());
        for part in &split {
            let opts = piece_options(part)?;
            if opts.is_empty() {
                continue 'split;
            }
            option_lists.push(opts);
        }
        // product over the option lists, keeping tuples whose degrees sum
        // to the total degree vector
        let mut choice = vec![0usize; split.len()];
        'product: loop {
            let mut sums = vec![0i64; ranks.len()];
            for (part_idx, &opt_idx) in choice.iter().enumerate() {
                for (i, d) in option_lists[part_idx][opt_idx].iter().enumerate() {
                    sums[i] += d;
                }
            }
            if sums == degrees {
                let tuple: Vec<SubDatum> = split
                    .iter()
                    .enumerate()
                    .map(|(part_idx, part)| {
                        (part.clone(), option_lists[part_idx][choice[part_idx]].clone())
                    })
                    .collect();
                out.push(tuple);
            }
            let mut advanced = false;
            for i in 0..choice.len() {
                choice[i] += 1;
                if choice[i] < option_lists[i].len() {
                    advanced = true;
                    break;
                }
                choice[i] = 0;
            }
            if advanced {
                continue 'product;
            }
            break;
        }
    }

    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::slope;
    use super::*;

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&n| rat(n)).collect()
    }

    #[test]
    fn proper_sub_ranks_exclude_zero_and_full() {
        let subs = proper_sub_ranks(&[1, 1]);
        assert_eq!(subs, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(proper_sub_ranks(&[1]).len(), 0);
        assert_eq!(proper_sub_ranks(&[2, 1]).len(), 4);
    }

    #[test]
    fn worked_wall_instance() {
        let report = find_walls(&[1, 1], &[1, 0], &rats(&[0, 2]), &[0, 1], &rat(10)).unwrap();
        let ts: Vec<BigRational> = report.walls.iter().map(|w| w.t.clone()).collect();
        assert_eq!(ts, rats(&[1, 3, 5, 7, 9]));
        // both sub-rank families witness every wall
        for w in &report.walls {
            let ranks: Vec<&Vec<i64>> = w.witnesses.iter().map(|(m, _)| m).collect();
            assert!(ranks.contains(&&vec![1, 0]), "t = {}", w.t);
            assert!(ranks.contains(&&vec![0, 1]), "t = {}", w.t);
        }
    }

    #[test]
    fn zero_delta_means_no_walls() {
        let report = find_walls(&[1, 1], &[1, 0], &rats(&[0, 2]), &[0, 0], &rat(10)).unwrap();
        assert!(report.walls.is_empty());
    }

    #[test]
    fn single_slot_has_no_walls() {
        let report = find_walls(&[3], &[5], &rats(&[0]), &[1], &rat(4)).unwrap();
        assert!(report.walls.is_empty());
    }

    #[test]
    fn domain_errors() {
        assert!(find_walls(&[1, 1], &[0, 0], &rats(&[0, 2]), &[0, 1], &rat(0)).is_err());
        assert!(find_walls(&[1, 1], &[0, 0], &rats(&[2, 0]), &[0, 1], &rat(1)).is_err());
        // gap collapses inside the interval: alpha = (0, 2), delta = (0, -1), t_max = 3
        assert!(find_walls(&[1, 1], &[0, 0], &rats(&[0, 2]), &[0, -1], &rat(3)).is_err());
    }

    #[test]
    fn equal_slope_examples() {
        // slopes of the rank-one pieces are integers resp. integer + 2,
        // but the total slope is 3/2: nothing decomposes.
        let none = equal_slope_decompositions(&[1, 1], &[1, 0], &rats(&[0, 2])).unwrap();
        assert!(none.is_empty());

        // at alpha = (0, 1) both orderings of {((1,0),(1,0)), ((0,1),(0,0))}
        let two = equal_slope_decompositions(&[1, 1], &[1, 0], &rats(&[0, 1])).unwrap();
        assert_eq!(
            two,
            vec![
                vec![(vec![0, 1], vec![0, 0]), (vec![1, 0], vec![1, 0])],
                vec![(vec![1, 0], vec![1, 0]), (vec![0, 1], vec![0, 0])],
            ]
        );

        let single = equal_slope_decompositions(&[1], &[0], &rats(&[0])).unwrap();
        assert!(single.is_empty());
    }

    #[test]
    fn decomposition_pieces_average_back_to_the_total_slope() {
        let alpha = rats(&[0, 1]);
        for tuple in equal_slope_decompositions(&[1, 1], &[1, 0], &alpha).unwrap() {
            let mu = slope(&[1, 1], &[1, 0], &alpha).unwrap();
            let mut weighted = BigRational::zero();
            let mut rank = 0i64;
            for (m, e) in &tuple {
                let support: Vec<usize> = (0..m.len()).filter(|&i| m[i] > 0).collect();
                let mr: Vec<i64> = support.iter().map(|&i| m[i]).collect();
                let er: Vec<i64> = support.iter().map(|&i| e[i]).collect();
                let ar: Vec<BigRational> = support.iter().map(|&i| alpha[i].clone()).collect();
                let piece_rank: i64 = mr.iter().sum();
                weighted += slope(&mr, &er, &ar).unwrap() * rat(piece_rank);
                rank += piece_rank;
            }
            assert_eq!(weighted / rat(rank), mu);
        }
    }
}

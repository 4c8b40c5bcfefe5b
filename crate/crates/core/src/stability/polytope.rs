//! Finite enumeration of admissible degree vectors.
//!
//! For fixed ranks, parameter and total degree, the necessary conditions
//! cut a compact rational polytope out of the hyperplane `sum d_i = total`.
//! Per-coordinate bounds are derived by exact Fourier-Motzkin elimination
//! over the rational inequality system, then lattice points are enumerated
//! depth first with prefix pruning. Correctness is defined by the final
//! filter through [`necessary_conditions`], not by the bounding method.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::conditions::necessary_conditions;
use super::{require_strictly_increasing, ChainDatum};
use crate::error::{Error, Result};

/// `<coeffs, x> <= bound`.
#[derive(Clone, PartialEq, Eq, Debug)]
struct LinIneq {
    coeffs: Vec<BigRational>,
    bound: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The full inequality system of the necessary conditions over the
/// variables `x_0..x_r` (degrees), with the total degree already folded
/// into the bounds.
fn build_system(ranks: &[i64], alpha: &[BigRational], total: i64) -> Vec<LinIneq> {
    let r = ranks.len() - 1;
    let total_rank: i64 = ranks.iter().sum();
    let alpha_weight: BigRational = ranks
        .iter()
        .zip(alpha)
        .map(|(&n, a)| a.clone() * rat(n))
        .sum();
    // mu * total_rank = total + alpha_weight
    let mu_num = rat(total) + alpha_weight.clone();
    let mut rows = Vec::new();

    // C1: prefixes.
    for j in 0..r {
        let mut coeffs = vec![BigRational::zero(); r + 1];
        let mut prefix_rank = 0i64;
        let mut prefix_weight = BigRational::zero();
        for i in 0..=j {
            coeffs[i] = rat(total_rank);
            prefix_rank += ranks[i];
            prefix_weight += alpha[i].clone() * rat(ranks[i]);
        }
        let bound = rat(prefix_rank) * mu_num.clone() - rat(total_rank) * prefix_weight;
        rows.push(LinIneq { coeffs, bound });
    }

    // C2: equal-rank steps, d_j <= d_{j-1}.
    for j in 1..=r {
        if ranks[j] == ranks[j - 1] {
            let mut coeffs = vec![BigRational::zero(); r + 1];
            coeffs[j] = rat(1);
            coeffs[j - 1] = rat(-1);
            rows.push(LinIneq {
                coeffs,
                bound: BigRational::zero(),
            });
        }
    }

    // Shared builder for the two window families: the chain with slots
    // k..=j replaced by `(rank, x_pivot)` repeated, compared against mu.
    // `sign = +1` encodes (modified slope) <= mu, `sign = -1` the reverse.
    let mut window_row = |k: usize, j: usize, pivot: usize, rank: i64, sign: i64| {
        let mut coeffs = vec![BigRational::zero(); r + 1];
        let mut mod_rank = 0i64;
        let mut mod_weight = BigRational::zero();
        for i in 0..=r {
            if i < k || i > j {
                coeffs[i] += rat(sign * total_rank);
                mod_rank += ranks[i];
                mod_weight += alpha[i].clone() * rat(ranks[i]);
            } else {
                coeffs[pivot] += rat(sign * total_rank);
                mod_rank += rank;
                mod_weight += alpha[i].clone() * rat(rank);
            }
        }
        let bound = rat(sign) * (rat(mod_rank) * mu_num.clone() - rat(total_rank) * mod_weight);
        rows.push(LinIneq { coeffs, bound });
    };

    // C3: windows with n_j strictly below everything before it.
    for j in 1..=r {
        let mut window_min = i64::MAX;
        for k in (0..j).rev() {
            window_min = window_min.min(ranks[k]);
            if ranks[j] < window_min {
                window_row(k, j, j, ranks[j], 1);
            }
        }
    }

    // C4 (dual form): windows with n_k strictly below everything after it.
    for k in 0..r {
        let mut window_min = i64::MAX;
        for j in (k + 1)..=r {
            window_min = window_min.min(ranks[j]);
            if ranks[k] < window_min {
                window_row(k, j, k, ranks[k], -1);
            }
        }
    }

    rows
}

/// Fold `x_r := total - sum x_i` into the system, leaving `r` variables.
fn substitute_last(rows: Vec<LinIneq>, total: i64) -> Vec<LinIneq> {
    rows.into_iter()
        .map(|row| {
            let r = row.coeffs.len() - 1;
            let last = row.coeffs[r].clone();
            let coeffs = (0..r).map(|i| row.coeffs[i].clone() - last.clone()).collect();
            LinIneq {
                coeffs,
                bound: row.bound - last * rat(total),
            }
        })
        .collect()
}

/// Scale a row so the coefficient vector is a primitive integer vector.
fn normalize(row: &mut LinIneq) {
    let mut denom_lcm = BigInt::from(1);
    for c in &row.coeffs {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let scale = BigRational::from_integer(denom_lcm);
    let ints: Vec<BigInt> = row
        .coeffs
        .iter()
        .map(|c| (c * scale.clone()).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = num_integer::gcd(g, c.abs());
    }
    if g.is_zero() {
        return; // constant row, leave as is
    }
    let factor = scale / BigRational::from_integer(g);
    for c in row.coeffs.iter_mut() {
        *c *= factor.clone();
    }
    row.bound *= factor;
}

/// One Fourier-Motzkin step: eliminate variable `var` (the highest index in
/// play). Returns `None` if a trivially infeasible constant row appears.
fn eliminate(rows: &[LinIneq], var: usize) -> Option<Vec<LinIneq>> {
    let mut carried = Vec::new();
    let mut upper = Vec::new(); // positive coefficient on var
    let mut lower = Vec::new(); // negative coefficient on var
    for row in rows {
        let c = &row.coeffs[var];
        if c.is_zero() {
            carried.push(row.clone());
        } else if c.is_positive() {
            upper.push(row.clone());
        } else {
            lower.push(row.clone());
        }
    }
    let mut out = carried;
    for up in &upper {
        for lo in &lower {
            let a = up.coeffs[var].clone();
            let b = -lo.coeffs[var].clone(); // positive
            let coeffs: Vec<BigRational> = (0..var)
                .map(|i| up.coeffs[i].clone() * b.clone() + lo.coeffs[i].clone() * a.clone())
                .collect();
            let bound = up.bound.clone() * b + lo.bound.clone() * a;
            out.push(LinIneq { coeffs, bound });
        }
    }
    // Truncate each row to the remaining variables, normalize, dedup.
    let mut seen: Vec<LinIneq> = Vec::new();
    for mut row in out {
        row.coeffs.truncate(var);
        normalize(&mut row);
        if row.coeffs.iter().all(Zero::is_zero) {
            if row.bound.is_negative() {
                return None; // 0 <= negative: empty polytope
            }
            continue;
        }
        match seen.iter_mut().find(|s| s.coeffs == row.coeffs) {
            Some(s) => {
                if row.bound < s.bound {
                    s.bound = row.bound;
                }
            }
            None => seen.push(row),
        }
    }
    Some(seen)
}

/// Exactly the integer degree vectors summing to `total` that pass the
/// necessary conditions; finite, lexicographically sorted.
pub fn enumerate_admissible_degrees(
    ranks: &[i64],
    alpha: &[BigRational],
    total: i64,
) -> Result<Vec<Vec<i64>>> {
    if ranks.is_empty() || ranks.len() != alpha.len() {
        return Err(Error::domain(
            "enumeration needs nonempty ranks and a parameter of equal length",
        ));
    }
    if let Some(bad) = ranks.iter().find(|&&n| n < 1) {
        return Err(Error::domain(format!("ranks must be positive, got {bad}")));
    }
    require_strictly_increasing(alpha)?;
    let r = ranks.len() - 1;

    let accept = |degrees: Vec<i64>, out: &mut Vec<Vec<i64>>| -> Result<()> {
        let datum = ChainDatum::new(ranks.to_vec(), degrees.clone(), alpha.to_vec())?;
        if necessary_conditions(&datum)?.passed() {
            out.push(degrees);
        }
        Ok(())
    };

    let mut out = Vec::new();
    if r == 0 {
        accept(vec![total], &mut out)?;
        return Ok(out);
    }

    // Tier t is the system over x_0..x_t; tier r-1 is the substituted full
    // system and each lower tier is one elimination step down.
    let full = substitute_last(build_system(ranks, alpha, total), total);
    let mut tiers: Vec<Vec<LinIneq>> = vec![Vec::new(); r];
    tiers[r - 1] = {
        let mut rows = Vec::new();
        for mut row in full {
            normalize(&mut row);
            if row.coeffs.iter().all(Zero::is_zero) {
                if row.bound.is_negative() {
                    return Ok(Vec::new());
                }
                continue;
            }
            rows.push(row);
        }
        rows
    };
    for t in (1..r).rev() {
        match eliminate(&tiers[t], t) {
            Some(rows) => tiers[t - 1] = rows,
            None => return Ok(Vec::new()),
        }
    }

    // Depth-first lattice enumeration with prefix pruning.
    fn dfs(
        tiers: &[Vec<LinIneq>],
        level: usize,
        prefix: &mut Vec<i64>,
        total: i64,
        accept: &mut dyn FnMut(Vec<i64>) -> Result<()>,
    ) -> Result<()> {
        let rows = &tiers[level];
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for row in rows {
            let c = &row.coeffs[level];
            if c.is_zero() {
                continue; // implied by the lower tier the prefix came from
            }
            let mut rest = row.bound.clone();
            for (i, &p) in prefix.iter().enumerate() {
                rest -= row.coeffs[i].clone() * rat(p);
            }
            let ratio = rest / c.clone();
            if c.is_positive() {
                hi = Some(match hi {
                    None => ratio,
                    Some(h) => h.min(ratio),
                });
            } else {
                lo = Some(match lo {
                    None => ratio,
                    Some(l) => l.max(ratio),
                });
            }
        }
        let (lo, hi) = match (lo, hi) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => {
                return Err(Error::internal(
                    "unbounded admissibility polytope; the necessary conditions should forbid this",
                ))
            }
        };
        let lo = lo.ceil().to_integer();
        let hi = hi.floor().to_integer();
        let (lo, hi) = match (i64::try_from(&lo), i64::try_from(&hi)) {
            (Ok(lo), Ok(hi)) => (lo, hi),
            _ => {
                return Err(Error::internal(
                    "admissibility bounds exceed the integer range",
                ))
            }
        };
        for v in lo..=hi {
            prefix.push(v);
            if level + 1 < tiers.len() {
                dfs(tiers, level + 1, prefix, total, accept)?;
            } else {
                let mut degrees = prefix.clone();
                degrees.push(total - prefix.iter().sum::<i64>());
                accept(degrees)?;
            }
            prefix.pop();
        }
        Ok(())
    }

    let mut sink = |degs: Vec<i64>| accept(degs, &mut out);
    dfs(&tiers, 0, &mut Vec::new(), total, &mut sink)?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&n| rat(n)).collect()
    }

    /// Brute-force oracle over a box, using the same filter.
    fn brute(ranks: &[i64], alpha: &[BigRational], total: i64, half_width: i64) -> Vec<Vec<i64>> {
        let r = ranks.len() - 1;
        let mut out = Vec::new();
        let mut cursor = vec![-half_width; r];
        loop {
            let partial: i64 = cursor.iter().sum();
            let last = total - partial;
            if last.abs() <= half_width {
                let mut degrees = cursor.clone();
                degrees.push(last);
                let datum =
                    ChainDatum::new(ranks.to_vec(), degrees.clone(), alpha.to_vec()).unwrap();
                if necessary_conditions(&datum).unwrap().passed() {
                    out.push(degrees);
                }
            }
            // odometer
            let mut i = 0;
            loop {
                if i == r {
                    out.sort();
                    return out;
                }
                cursor[i] += 1;
                if cursor[i] <= half_width {
                    break;
                }
                cursor[i] = -half_width;
                i += 1;
            }
        }
    }

    #[test]
    fn example_rank_one_one() {
        let got = enumerate_admissible_degrees(&[1, 1], &rats(&[0, 2]), 1).unwrap();
        assert_eq!(got, vec![vec![1, 0]]);
        assert_eq!(got, brute(&[1, 1], &rats(&[0, 2]), 1, 10));
    }

    #[test]
    fn example_rank_two_one() {
        let got = enumerate_admissible_degrees(&[2, 1], &rats(&[0, 2]), 1).unwrap();
        assert_eq!(got, vec![vec![1, 0], vec![2, -1]]);
        assert_eq!(got, brute(&[2, 1], &rats(&[0, 2]), 1, 10));
    }

    #[test]
    fn example_single_rank() {
        let got = enumerate_admissible_degrees(&[1], &rats(&[0]), 7).unwrap();
        assert_eq!(got, vec![vec![7]]);
    }

    #[test]
    fn matches_brute_force_on_mixed_ranks() {
        for (ranks, alpha, total) in [
            (vec![1, 2], rats(&[0, 2]), 0),
            (vec![2, 1, 1], rats(&[0, 2, 4]), -1),
            (vec![1, 1, 1], rats(&[-1, 1, 3]), 2),
            (vec![3, 2], rats(&[0, 3]), 4),
        ] {
            let got = enumerate_admissible_degrees(&ranks, &alpha, total).unwrap();
            let want = brute(&ranks, &alpha, total, 25);
            assert_eq!(got, want, "ranks {ranks:?} total {total}");
        }
    }

    #[test]
    fn rejects_non_increasing_alpha() {
        assert!(enumerate_admissible_degrees(&[1, 1], &rats(&[2, 0]), 0).is_err());
    }
}

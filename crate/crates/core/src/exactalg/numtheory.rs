//! Elementary number theory: divisors, the Moebius function, Ramanujan sums.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Moebius function: 0 if `k` has a squared prime factor, otherwise
/// `(-1)^{number of prime factors}`.
pub fn moebius(k: u64) -> Result<i64> {
    if k == 0 {
        return Err(Error::domain("moebius is defined for k >= 1"));
    }
    let mut n = k;
    let mut factors = 0u32;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return Ok(0);
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    Ok(if factors % 2 == 0 { 1 } else { -1 })
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::domain("divisors are defined for n >= 1"));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// Ramanujan sum `c_q(d) = sum over units l mod q of zeta^{-ld}`, an integer.
///
/// Evaluated by the divisor form `sum_{e | gcd(q, d)} e * mu(q/e)`; the
/// brute-force group-algebra sum serves as the independent test oracle.
/// For `gcd(d, q) = 1` this equals `mu(q)`.
pub fn ramanujan_sum(q: u64, d: i64) -> Result<i64> {
    if q == 0 {
        return Err(Error::domain("ramanujan_sum is defined for q >= 1"));
    }
    let d_red = d.rem_euclid(q as i64) as u64;
    let e = if d_red == 0 { q } else { q.gcd(&d_red) };
    let mut acc = 0i64;
    for t in divisors(e)? {
        acc += t as i64 * moebius(q / t)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(12).unwrap(), 0);
        assert_eq!(moebius(6).unwrap(), 1);
        assert!(matches!(moebius(0), Err(Error::Domain(_))));
    }

    #[test]
    fn moebius_against_trial_division_oracle() {
        // Independent oracle: full factorization by trial division.
        fn oracle(k: u64) -> i64 {
            let mut n = k;
            let mut distinct = 0;
            let mut p = 2;
            while p <= n {
                if n % p == 0 {
                    let mut e = 0;
                    while n % p == 0 {
                        n /= p;
                        e += 1;
                    }
                    if e > 1 {
                        return 0;
                    }
                    distinct += 1;
                }
                p += 1;
            }
            if distinct % 2 == 0 {
                1
            } else {
                -1
            }
        }
        for k in 1..=200 {
            assert_eq!(moebius(k).unwrap(), oracle(k), "k = {k}");
        }
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(6).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(divisors(9).unwrap(), vec![1, 3, 9]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn divisors_against_brute_scan() {
        for n in 1..=120u64 {
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n).unwrap(), brute, "n = {n}");
        }
    }

    #[test]
    fn ramanujan_examples() {
        assert_eq!(ramanujan_sum(6, 1).unwrap(), 1); // mu(6)
        assert_eq!(ramanujan_sum(1, 0).unwrap(), 1);
        assert_eq!(ramanujan_sum(4, 2).unwrap(), -2);
        assert!(ramanujan_sum(0, 1).is_err());
    }
}

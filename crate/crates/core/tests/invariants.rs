//! Cross-module invariants that complement the acceptance suite: ring
//! axioms on random inputs, generating-function consistency, degree
//! independence of the direct route, and the non-coprime agreement of the
//! two congruence-filtered routes.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use higgsy::curve::{hy_sym_cxp, hy_zeta_series, CurveContext};
use higgsy::exactalg::{LaurentPoly, TruncSeries};
use higgsy::genus::{pgl_hy, Method, PglInput};
use higgsy::stability::{equal_slope_decompositions, slope};

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    // up to 6 terms, exponents in [-8, 8], coefficients up to 1e6
    proptest::collection::vec(((-8i64..=8), (-1_000_000i64..=1_000_000)), 0..6)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, c.into()))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn laurent_ring_axioms((a, b, c) in (arb_poly(), arb_poly(), arb_poly())) {
        // commutativity and associativity of both operations
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        // distributivity
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        // evaluation at 1 is a ring homomorphism
        prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
        prop_assert_eq!((&a + &b).eval_one(), a.eval_one() + b.eval_one());
    }
}

#[test]
fn generating_function_consistency() {
    // The per-coefficient extraction (linear factor accumulation) agrees
    // with the product of binomial-expanded series term by term.
    for g in 2..=4i64 {
        let ctx = CurveContext::new(g).unwrap();
        for m in 1..=3u32 {
            let order = (2 * m as i64 * (g - 1)) as usize;
            let mut product = TruncSeries::one(order);
            for a in 0..m {
                product = &product * &hy_zeta_series(&ctx, a, order);
            }
            for k in 0..=order + 3 {
                let coeff = if k <= order {
                    product.coeff(k)
                } else {
                    LaurentPoly::zero()
                };
                assert_eq!(
                    hy_sym_cxp(&ctx, m, k as u32).unwrap(),
                    coeff,
                    "g={g} m={m} k={k}"
                );
            }
        }
    }
}

#[test]
fn direct_route_is_degree_independent_on_coprime_residues() {
    for n in 1..=6i64 {
        for g in [2, 3] {
            let mut reference: Option<LaurentPoly> = None;
            for d in (0..n).filter(|d| num_integer::gcd(n, *d) == 1) {
                let input = PglInput::new(n, d, g).unwrap();
                let direct = pgl_hy(&input, Method::Direct).unwrap();
                match &reference {
                    None => reference = Some(direct),
                    Some(r) => assert_eq!(r, &direct, "n={n} g={g} d={d}"),
                }
            }
        }
    }
}

#[test]
fn non_coprime_degrees_still_agree_between_direct_and_rootsum() {
    for n in 1..=4i64 {
        for g in [2, 3] {
            for d in 0..n {
                let input = PglInput::new(n, d, g).unwrap();
                let direct = pgl_hy(&input, Method::Direct).unwrap();
                let rootsum = pgl_hy(&input, Method::RootSum).unwrap();
                assert_eq!(direct, rootsum, "n={n} d={d} g={g}");
                if num_integer::gcd(n, d) != 1 {
                    assert!(pgl_hy(&input, Method::Closed).is_err());
                }
            }
        }
    }
}

#[test]
fn concurrent_use_is_safe_and_deterministic() {
    // pure functions over immutable values: unsynchronized threads must
    // produce identical results
    let handles: Vec<_> = (0..4)
        .map(|_| {
            std::thread::spawn(|| {
                let input = PglInput::new(4, 1, 2).unwrap();
                pgl_hy(&input, Method::Direct).unwrap()
            })
        })
        .collect();
    let mut results: Vec<LaurentPoly> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    results.dedup();
    assert_eq!(results.len(), 1);
}

#[test]
fn decomposition_slopes_average_to_the_total() {
    let rats = |v: &[i64]| -> Vec<BigRational> {
        v.iter()
            .map(|&n| BigRational::from_integer(BigInt::from(n)))
            .collect()
    };
    for (ranks, degrees, alpha) in [
        (vec![1i64, 1], vec![1i64, 0], rats(&[0, 1])),
        (vec![1, 1], vec![0, 0], rats(&[-1, 1])),
        (vec![2, 1], vec![0, 0], rats(&[0, 3])),
        (vec![1, 1, 1], vec![1, 0, -1], rats(&[-2, 0, 2])),
    ] {
        let mu = slope(&ranks, &degrees, &alpha).unwrap();
        for tuple in equal_slope_decompositions(&ranks, &degrees, &alpha).unwrap() {
            assert!(tuple.len() >= 2);
            let mut rank_sum = vec![0i64; ranks.len()];
            let mut degree_sum = vec![0i64; ranks.len()];
            for (m, e) in &tuple {
                for i in 0..ranks.len() {
                    rank_sum[i] += m[i];
                    degree_sum[i] += e[i];
                }
                let support: Vec<usize> = (0..m.len()).filter(|&i| m[i] > 0).collect();
                let mr: Vec<i64> = support.iter().map(|&i| m[i]).collect();
                let er: Vec<i64> = support.iter().map(|&i| e[i]).collect();
                let ar: Vec<BigRational> = support.iter().map(|&i| alpha[i].clone()).collect();
                assert_eq!(slope(&mr, &er, &ar).unwrap(), mu, "piece slope off");
            }
            assert_eq!(rank_sum, ranks, "ranks must sum back");
            assert_eq!(degree_sum, degrees, "degrees must sum back");
        }
    }
}

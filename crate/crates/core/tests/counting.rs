use diagram_monoids::combinatorics::*;
use diagram_monoids::monoid::{enumerate, projections};
use diagram_monoids::structure::sigma_set;
use diagram_monoids::Family;
use num_bigint::BigUint;
use num_traits::Zero;

#[test]
fn square_sum_identities() {
    for n in 0..=10 {
        let m: BigUint = (0..=n).map(|r| motzkin_m(n as i64, r as i64).pow(2)).sum();
        assert_eq!(m, motzkin(2 * n));
        let pb: BigUint = (0..=n).map(|r| (binomial(n as i64, r as i64) * a_seq(n - r)).pow(2) * factorial(r)).sum();
        assert_eq!(pb, a_seq(2 * n));
    }
}

#[test]
fn tableaux_square_sum() {
    for r in 0..=8 {
        let s: BigUint = partitions(r).iter().map(|l| standard_tableaux_count(l).unwrap().pow(2)).sum();
        assert_eq!(s, factorial(r));
    }
}

#[test]
fn class_counts_match_enumeration() {
    for family in Family::ALL {
        let max_n = if family == Family::PB { 4 } else { 5 };
        for n in 0..=max_n {
            let mut total = BigUint::zero();
            for r in 0..=n {
                if family.needs_parity() && (n - r) % 2 == 1 {
                    assert!(rclass_count(family, n, r).is_err());
                    continue;
                }
                let d = enumerate(family, n, Some(r)).unwrap();
                assert_eq!(BigUint::from(d.len()), dclass_size(family, n, r).unwrap(), "{family} {n} {r}");
                let p = projections(family, n, r).unwrap();
                assert_eq!(BigUint::from(p.len()), rclass_count(family, n, r).unwrap(), "{family} {n} {r}");
                total += BigUint::from(d.len());
            }
            assert_eq!(total, family_size(family, n));
        }
    }
}

#[test]
fn sigma_counts_are_riordan_like() {
    for n in 1..=7 {
        for r in 1..=n {
            assert_eq!(
                BigUint::from(sigma_set(n, r).unwrap().len()),
                riordan_mprime(n as i64, r as i64 - 1),
                "n={n} r={r}"
            );
        }
    }
}

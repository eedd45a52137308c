//! Counting sequences and the closed formulas for class counts, ideal sizes
//! and ranks. Everything is exact (`BigUint`).

use std::sync::{LazyLock, Mutex};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monoid::Family;

static A_SEQ: LazyLock<Mutex<Vec<BigUint>>> = LazyLock::new(|| Mutex::new(vec![BigUint::one(), BigUint::one()]));
static M_TABLE: LazyLock<Mutex<Vec<Vec<BigUint>>>> = LazyLock::new(|| Mutex::new(vec![vec![BigUint::one()]]));
static MPRIME_TABLE: LazyLock<Mutex<Vec<Vec<BigUint>>>> = LazyLock::new(|| Mutex::new(vec![vec![BigUint::one()]]));

pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `k!!` over odd numbers: `(-1)!! = 1`, and `0` for even `k`.
pub fn double_factorial(k: i64) -> BigUint {
    if k == -1 {
        return BigUint::one();
    }
    if k < -1 || k % 2 == 0 {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    let mut i = k as u64;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    acc
}

pub fn factorial(k: usize) -> BigUint {
    (1..=k as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// Number of partial matchings of `m` points: `a(m) = a(m-1) + (m-1) a(m-2)`.
pub fn a_seq(m: usize) -> BigUint {
    let mut t = A_SEQ.lock().unwrap();
    while t.len() <= m {
        let k = t.len();
        let next = &t[k - 1] + &t[k - 2] * (k as u64 - 1);
        t.push(next);
    }
    t[m].clone()
}

pub fn motzkin_m(n: i64, r: i64) -> BigUint {
    if n < 0 || r < 0 || r > n {
        return BigUint::zero();
    }
    let (n, r) = (n as usize, r as usize);
    let mut t = M_TABLE.lock().unwrap();
    while t.len() <= n {
        let prev = t.last().unwrap().clone();
        let k = t.len();
        let get = |j: i64| -> BigUint {
            if j < 0 || j as usize >= prev.len() {
                BigUint::zero()
            } else {
                prev[j as usize].clone()
            }
        };
        let row = (0..=k as i64).map(|j| get(j - 1) + get(j) + get(j + 1)).collect();
        t.push(row);
    }
    t[n][r].clone()
}

/// `m(n) = m(n, 0)`, the Motzkin number.
pub fn motzkin(n: usize) -> BigUint {
    motzkin_m(n as i64, 0)
}

pub fn riordan_mprime(n: i64, r: i64) -> BigUint {
    if n < 0 || r < 0 || r > n {
        return BigUint::zero();
    }
    let (n, r) = (n as usize, r as usize);
    let mut t = MPRIME_TABLE.lock().unwrap();
    while t.len() <= n {
        let prev = t.last().unwrap().clone();
        let k = t.len();
        let mut row = Vec::with_capacity(k + 1);
        for j in 0..=k {
            let mut v = if j >= 1 { prev[j - 1].clone() } else { BigUint::zero() };
            for p in prev.iter().skip(j + 1) {
                v += p;
            }
            row.push(v);
        }
        t.push(row);
    }
    t[n][r].clone()
}

/// `m'(n) = m'(n, 0)`, the Riordan number.
pub fn riordan(n: usize) -> BigUint {
    riordan_mprime(n as i64, 0)
}

pub(crate) fn check_rank(family: Family, n: usize, r: usize) -> Result<()> {
    if r > n {
        return Err(Error::RankOutOfRange { n, r });
    }
    if family.needs_parity() && !(n - r).is_multiple_of(2) {
        return Err(Error::ParityInvalid { family: family.name().into(), n, r });
    }
    Ok(())
}

/// Number of R-classes (equivalently projections) in `D_r` of the family.
pub fn rclass_count(family: Family, n: usize, r: usize) -> Result<BigUint> {
    check_rank(family, n, r)?;
    let (ni, ri) = (n as i64, r as i64);
    Ok(match family {
        Family::I | Family::O => binomial(ni, ri),
        Family::B => binomial(ni, ri) * double_factorial(ni - ri - 1),
        Family::J => {
            let k = (n - r) / 2;
            let num = binomial(ni + 1, k as i64) * (r as u64 + 1);
            let (q, rem) = num.div_rem(&BigUint::from(n as u64 + 1));
            assert!(rem.is_zero(), "Jones count is not integral");
            q
        }
        Family::PB => binomial(ni, ri) * a_seq(n - r),
        Family::M => motzkin_m(ni, ri),
        Family::S => {
            if r == n {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        }
    })
}

pub fn hclass_size(family: Family, r: usize) -> BigUint {
    if family.is_aperiodic() {
        BigUint::one()
    } else {
        factorial(r)
    }
}

pub fn dclass_size(family: Family, n: usize, r: usize) -> Result<BigUint> {
    let c = rclass_count(family, n, r)?;
    Ok(&c * &c * hclass_size(family, r))
}

/// `|I_r|`: number of elements of rank at most `r`.
pub fn ideal_size(family: Family, n: usize, r: usize) -> Result<BigUint> {
    if r > n {
        return Err(Error::RankOutOfRange { n, r });
    }
    let mut total = BigUint::zero();
    for s in 0..=r {
        if check_rank(family, n, s).is_ok() {
            total += dclass_size(family, n, s)?;
        }
    }
    Ok(total)
}

pub fn family_size(family: Family, n: usize) -> BigUint {
    ideal_size(family, n, n).expect("r = n is always valid")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealRank {
    pub rank: BigUint,
    pub idrank: Option<BigUint>,
    pub idempotent_generated: bool,
}

impl IdealRank {
    fn new(rank: BigUint, idempotent_generated: bool) -> IdealRank {
        let idrank = idempotent_generated.then(|| rank.clone());
        IdealRank { rank, idrank, idempotent_generated }
    }
}

/// Rank of the ideal `I_r` of `PB_n` or `M_n` (`r = n` is the whole monoid).
pub fn rank_of_ideal(family: Family, n: usize, r: usize) -> Result<IdealRank> {
    if r > n {
        return Err(Error::RankOutOfRange { n, r });
    }
    let (ni, ri) = (n as i64, r as i64);
    match family {
        Family::PB => Ok(if r + 2 <= n {
            let rank = binomial(ni, ri - 1) * double_factorial(ni - ri) + binomial(ni, ri) * a_seq(n - r);
            IdealRank::new(rank, true)
        } else if r + 1 == n {
            let c = binomial(ni + 1, 2);
            let rank = if n <= 3 { c } else { c + 1u32 };
            IdealRank::new(rank, n == 1)
        } else {
            let rank = if n <= 2 { BigUint::from(n + 1) } else { BigUint::from(4u32) };
            IdealRank::new(rank, n <= 1)
        }),
        Family::M => Ok(if r == 0 {
            IdealRank::new(motzkin(n), true)
        } else if r == n {
            IdealRank::new(BigUint::from(2 * n), n <= 1)
        } else {
            let rank = motzkin_m(ni, ri) + riordan_mprime(ni, ri - 1);
            IdealRank::new(rank, r < n / 2)
        }),
        other => Err(Error::FamilyMismatch(format!("no rank formula for {}", other.name()))),
    }
}

/// Rank of the idempotent-generated subsemigroup of `PB_n` or `M_n`
/// (`r = None`), or of `I_r(M_n)` / `I_r(PB_n)` for `r ≤ n - 2`.
pub fn rank_of_idempotent_generated(family: Family, n: usize, r: Option<usize>) -> Result<BigUint> {
    let ni = n as i64;
    match (family, r) {
        (Family::PB, None) => Ok(binomial(ni + 1, 2) + 1u32),
        (Family::M, None) => Ok(match n {
            0 => BigUint::one(),
            1 => BigUint::from(2u32),
            _ => BigUint::from(3 * n - 2),
        }),
        (Family::M | Family::PB, Some(r)) if r + 2 <= n || r == 0 => Ok(rank_of_ideal(family, n, r)?.rank),
        (Family::M | Family::PB, Some(r)) => {
            Err(Error::OutOfTheoremRange(format!("idempotent-generated part of I_{r} in degree {n} needs r <= n-2")))
        }
        (other, _) => Err(Error::FamilyMismatch(format!("no formula for {}", other.name()))),
    }
}

fn check_partition(lambda: &[usize]) -> Result<()> {
    if lambda.contains(&0) || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotAPartition(lambda.to_vec()));
    }
    Ok(())
}

/// Number of standard tableaux of shape `lambda`, by the hook-length formula.
pub fn standard_tableaux_count(lambda: &[usize]) -> Result<BigUint> {
    check_partition(lambda)?;
    let r: usize = lambda.iter().sum();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            let below = lambda[i + 1..].iter().filter(|&&len| len > j).count();
            hooks *= (row - j + below) as u64;
        }
    }
    Ok(factorial(r) / hooks)
}

/// Dimension of the partial Brauer cell module indexed by `(r, lambda)`.
pub fn cell_dim_pb(n: usize, r: usize, lambda: &[usize]) -> Result<BigUint> {
    check_partition(lambda)?;
    if lambda.iter().sum::<usize>() != r {
        return Err(Error::NotAPartition(lambda.to_vec()));
    }
    if r > n {
        return Err(Error::RankOutOfRange { n, r });
    }
    Ok(rclass_count(Family::PB, n, r)? * standard_tableaux_count(lambda)?)
}

/// All partitions of `r`, in reverse lexicographic order.
pub fn partitions(r: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, &mut Vec::new(), &mut out);
    out
}

/// Converts a count to `usize` if it fits.
pub fn to_usize(x: &BigUint) -> Option<usize> {
    x.to_usize()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn sequences() {
        assert_eq!(a_seq(0), b(1));
        assert_eq!(a_seq(4), b(10));
        assert_eq!(a_seq(6), b(76));
        assert_eq!(motzkin_m(7, 3), b(133));
        assert_eq!(riordan_mprime(6, 0), b(15));
        assert_eq!(motzkin_m(0, 0), b(1));
        assert_eq!(motzkin_m(3, 4), b(0));
        assert_eq!(motzkin_m(3, -1), b(0));
        assert_eq!(riordan_mprime(5, 5), b(1));
        assert_eq!(double_factorial(-1), b(1));
        assert_eq!(double_factorial(4), b(0));
        assert_eq!(double_factorial(5), b(15));
        assert_eq!(binomial(7, 2), b(21));
        assert_eq!(binomial(3, 5), b(0));
    }

    #[test]
    fn rclass_examples() {
        assert_eq!(rclass_count(Family::PB, 7, 7).unwrap(), b(1));
        assert_eq!(rclass_count(Family::B, 6, 2).unwrap(), b(45));
        assert_eq!(rclass_count(Family::J, 6, 2).unwrap(), b(9));
        assert_eq!(rclass_count(Family::J, 4, 2).unwrap(), b(3));
        assert!(matches!(rclass_count(Family::B, 5, 2), Err(Error::ParityInvalid { .. })));
        assert_eq!(rclass_count(Family::M, 4, 2).unwrap(), b(9));
        assert_eq!(rclass_count(Family::PB, 3, 1).unwrap(), b(6));
    }

    #[test]
    fn sizes() {
        assert_eq!(ideal_size(Family::M, 5, 2).unwrap(), b(1966));
        assert_eq!(ideal_size(Family::PB, 4, 3).unwrap(), b(740));
        assert_eq!(dclass_size(Family::PB, 4, 4).unwrap(), b(24));
        assert_eq!(dclass_size(Family::M, 4, 4).unwrap(), b(1));
        assert_eq!(dclass_size(Family::PB, 3, 2).unwrap(), b(18));
        assert_eq!(family_size(Family::S, 3), b(6));
        assert_eq!(family_size(Family::B, 3), b(15));
        assert_eq!(family_size(Family::I, 2), b(7));
    }

    #[test]
    fn rank_examples() {
        let r = rank_of_ideal(Family::PB, 4, 1).unwrap();
        assert_eq!((r.rank.clone(), r.idrank.clone()), (b(19), Some(b(19))));
        let r = rank_of_ideal(Family::M, 5, 2).unwrap();
        assert_eq!(r.rank, b(32));
        assert!(!r.idempotent_generated && r.idrank.is_none());
        let r = rank_of_ideal(Family::M, 4, 4).unwrap();
        assert_eq!(r.rank, b(8));
        assert!(!r.idempotent_generated);
        assert_eq!(rank_of_idempotent_generated(Family::PB, 5, None).unwrap(), b(16));
        assert_eq!(rank_of_idempotent_generated(Family::M, 5, None).unwrap(), b(13));
        assert_eq!(rank_of_idempotent_generated(Family::M, 6, Some(2)).unwrap(), b(83));
        assert!(matches!(rank_of_idempotent_generated(Family::M, 6, Some(5)), Err(Error::OutOfTheoremRange(_))));
    }

    #[test]
    fn tableaux() {
        assert_eq!(standard_tableaux_count(&[2, 1]).unwrap(), b(2));
        for r in 0..6 {
            assert_eq!(standard_tableaux_count(&[r.max(1)]).unwrap(), b(1));
        }
        assert_eq!(standard_tableaux_count(&[3, 2]).unwrap(), b(5));
        assert_eq!(cell_dim_pb(2, 1, &[1]).unwrap(), b(2));
        assert!(matches!(standard_tableaux_count(&[1, 2]), Err(Error::NotAPartition(_))));
        assert!(cell_dim_pb(2, 2, &[1]).is_err());
        assert_eq!(partitions(4).len(), 5);
    }
}

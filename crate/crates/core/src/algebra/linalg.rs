//! Exact rank computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in rank + 1..rows {
            let factor = m[i][col].clone();
            for j in col + 1..cols {
                let v = &m[i][j] * &pivot - &factor * &m[rank][j];
                debug_assert!((&v % &prev).is_zero());
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix: each row is scaled to integers first.
pub fn rational_rank(m: &[Vec<BigRational>]) -> usize {
    let ints = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    integer_rank(ints)
}

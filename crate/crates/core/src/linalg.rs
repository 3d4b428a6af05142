//! Exact rank by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

use crate::scalar::ExactInteger;

/// Rank of an integer matrix. Every intermediate entry is a minor of the
/// input, so the divisions are exact.
pub fn bareiss_rank<T: ExactInteger>(mut m: Vec<Vec<T>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in rank + 1..rows {
            let factor = m[i][col].clone();
            for j in col + 1..cols {
                let v = m[i][j].clone() * pivot.clone() - factor.clone() * m[rank][j].clone();
                m[i][j] = v / prev.clone();
            }
            m[i][col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank over the rationals: rows are cleared of denominators first.
pub fn ratio_rank<T: ExactInteger>(m: &[Vec<Ratio<T>>]) -> usize {
    let scaled = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(T::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer().clone() * (l.clone() / x.denom().clone()))
                .collect()
        })
        .collect();
    bareiss_rank(scaled)
}

pub fn rational_rank(m: &[Vec<BigRational>]) -> usize {
    ratio_rank::<BigInt>(m)
}

/// Whether every entry below the diagonal is zero.
pub fn is_upper_triangular<T: Zero>(m: &[Vec<T>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().take(i).all(Zero::is_zero))
}

pub fn identity_matrix<T: Zero + One + Clone>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

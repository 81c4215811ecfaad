//! Lexicographic ranking of k-subsets (enumerative source coding).
//!
//! Ranks are positions in the lexicographic order of sorted index lists, so
//! `{0, 1, .., k-1}` has rank 0 and `{N-k, .., N-1}` has rank `C(N,k) - 1`.
//! Both directions walk the universe once, keeping `C(m-1, j-1)` (the number
//! of completions that pick the current position) up to date with one small
//! multiply and one exact small divide per step.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `⌈log₂ C(N,k)⌉`: bits needed for a rank.
pub fn rank_width(universe: usize, k: usize) -> usize {
    let c = binomial(universe as u64, k as u64);
    if c.is_zero() {
        return 0;
    }
    (c - 1u32).bits() as usize
}

/// Rank of a strictly increasing index list among all `k`-subsets of
/// `0..universe`.
pub fn rank_subset(universe: usize, subset: &[usize]) -> Result<BigUint> {
    if subset.windows(2).any(|w| w[0] >= w[1]) || subset.iter().any(|&i| i >= universe) {
        return Err(Error::IndexOutOfRange);
    }
    let k = subset.len();
    let mut rank = BigUint::zero();
    if k == 0 {
        return Ok(rank);
    }
    let mut b = binomial(universe as u64 - 1, k as u64 - 1);
    let mut j = k;
    let mut next = 0;
    for v in 0..universe {
        if j == 0 {
            break;
        }
        let m = (universe - v) as u64;
        let chosen = subset[next] == v;
        if chosen {
            next += 1;
            if m > 1 {
                b = b * (j as u64 - 1) / (m - 1);
            }
            j -= 1;
        } else {
            rank += &b;
            if m > 1 {
                b = b * (m - j as u64) / (m - 1);
            }
        }
    }
    Ok(rank)
}

/// Inverse of [`rank_subset`].
pub fn unrank_subset(universe: usize, k: usize, rank: &BigUint) -> Result<Vec<usize>> {
    if k > universe || *rank >= binomial(universe as u64, k as u64) {
        return Err(Error::IndexOutOfRange);
    }
    let mut out = Vec::with_capacity(k);
    if k == 0 {
        return Ok(out);
    }
    let mut rest = rank.clone();
    let mut b = binomial(universe as u64 - 1, k as u64 - 1);
    let mut j = k;
    for v in 0..universe {
        if j == 0 {
            break;
        }
        let m = (universe - v) as u64;
        if rest < b {
            out.push(v);
            if m > 1 {
                b = b * (j as u64 - 1) / (m - 1);
            }
            j -= 1;
        } else {
            rest -= &b;
            if m > 1 {
                b = b * (m - j as u64) / (m - 1);
            }
        }
    }
    Ok(out)
}

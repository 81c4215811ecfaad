//! Vectors of F₂ⁿ packed into integers.
//!
//! Coordinate `x₁` is the most significant of the `n` low bits, so coordinate
//! `i` (1-based) lives at bit `n - i`. Vectors in lexicographic order are
//! therefore in ascending integer order.

/// Bit mask of coordinate `i` (1-based) in an `n`-bit vector.
#[inline]
pub fn coord_mask(n: usize, i: usize) -> u32 {
    debug_assert!(i >= 1 && i <= n);
    1u32 << (n - i)
}

#[inline]
pub fn weight(x: u32) -> u32 {
    x.count_ones()
}

/// `⟨x, y⟩` over F₂.
#[inline]
pub fn dot(x: u32, y: u32) -> bool {
    (x & y).count_ones() & 1 == 1
}

/// Scatter the low bits of `v` into the set bits of `mask`, lowest first.
#[inline]
pub fn deposit(mut v: u32, mut mask: u32) -> u32 {
    let mut out = 0;
    while mask != 0 {
        let low = mask & mask.wrapping_neg();
        if v & 1 == 1 {
            out |= low;
        }
        v >>= 1;
        mask ^= low;
    }
    out
}

/// Gather the bits of `x` at the set bits of `mask` into the low bits.
#[inline]
pub fn extract(x: u32, mut mask: u32) -> u32 {
    let mut out = 0;
    let mut k = 0;
    while mask != 0 {
        let low = mask & mask.wrapping_neg();
        if x & low != 0 {
            out |= 1 << k;
        }
        k += 1;
        mask ^= low;
    }
    out
}

/// All points of the Hamming ball of radius `r` in F₂ⁿ, weight first, then
/// lexicographic.
pub fn ball_points(n: usize, r: usize) -> Vec<u32> {
    let mut pts: Vec<u32> = (0..1u32 << n).filter(|&x| weight(x) as usize <= r).collect();
    pts.sort_by_key(|&x| (weight(x), x));
    pts
}

/// Number of bits needed to write `v` in binary (0 for 0).
#[inline]
pub fn bit_length(v: u64) -> usize {
    (64 - v.leading_zeros()) as usize
}

/// `⌈log₂ n⌉`, with `⌈log₂ 1⌉ = 0`.
#[inline]
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        bit_length((n - 1) as u64)
    }
}

use super::function::BooleanFunction;
use crate::vector::weight;

// Within-word butterfly masks: bits at positions whose bit `k` is clear.
const LOW_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

fn mobius_words(n: usize, words: &mut [u64]) {
    for (k, mask) in LOW_MASKS.iter().enumerate().take(n.min(6)) {
        let shift = 1 << k;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for k in 6..n {
        let stride = 1 << (k - 6);
        for block in words.chunks_exact_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (a, b) in lo.iter().zip(hi.iter_mut()) {
                *b ^= *a;
            }
        }
    }
}

/// Möbius transform over F₂: `out(y) = ⊕_{x ⊆ y} in(x)`.
///
/// The transform is an involution, so the same call maps truth tables to
/// ANF coefficients and back.
pub fn mobius_transform(bits: &BooleanFunction) -> BooleanFunction {
    let mut words = bits.words().to_vec();
    mobius_words(bits.n(), &mut words);
    BooleanFunction::from_words(bits.n(), words)
}

/// Algebraic normal form: the coefficient table `M[f]` and its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnfPolynomial {
    coeffs: BooleanFunction,
    degree: usize,
}

fn max_weight(coeffs: &BooleanFunction) -> usize {
    let mut deg = 0;
    for (wi, &w) in coeffs.words().iter().enumerate() {
        let mut bits = w;
        while bits != 0 {
            let b = bits.trailing_zeros();
            deg = deg.max(weight((wi as u32) << 6 | b) as usize);
            bits &= bits - 1;
        }
    }
    deg
}

impl AnfPolynomial {
    pub fn from_function(f: &BooleanFunction) -> Self {
        Self::from_coeffs(mobius_transform(f))
    }

    pub fn from_coeffs(coeffs: BooleanFunction) -> Self {
        let degree = max_weight(&coeffs);
        Self { coeffs, degree }
    }

    pub fn n(&self) -> usize {
        self.coeffs.n()
    }

    /// Degree of the polynomial; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BooleanFunction {
        &self.coeffs
    }

    /// Monomials with nonzero coefficient, as exponent vectors.
    pub fn monomials(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.coeffs.len() as u32).filter(move |&y| self.coeffs.get(y))
    }

    pub fn to_function(&self) -> BooleanFunction {
        mobius_transform(&self.coeffs)
    }

    /// Drop every monomial of degree above `r`.
    pub fn truncate(&self, r: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        for y in 0..coeffs.len() as u32 {
            if weight(y) as usize > r && coeffs.get(y) {
                coeffs.set(y, false);
            }
        }
        Self::from_coeffs(coeffs)
    }
}

pub fn algebraic_degree(f: &BooleanFunction) -> usize {
    max_weight(&mobius_transform(f))
}

use crate::error::{Error, Result};
use crate::vector::dot;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Square matrix over F₂.
///
/// Row `i` (0-based) is a bit vector in the same convention as inputs: bit
/// `n - 1 - j` holds entry `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    n: usize,
    rows: Vec<u32>,
}

impl BinaryMatrix {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            rows: (0..n).map(|i| 1u32 << (n - 1 - i)).collect(),
        }
    }

    pub fn from_rows(n: usize, rows: Vec<u32>) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rows.len(),
            });
        }
        if n < 32 && rows.iter().any(|&r| r >> n != 0) {
            return Err(Error::OutOfRange("row wider than matrix".into()));
        }
        Ok(Self { n, rows })
    }

    /// The permutation matrix mapping coordinate `i` to `j` and back
    /// (1-based), identity elsewhere.
    pub fn swap(n: usize, i: usize, j: usize) -> Result<Self> {
        for c in [i, j] {
            if c == 0 || c > n {
                return Err(Error::BadCoordinate { coord: c, n });
            }
        }
        let mut m = Self::identity(n);
        m.rows.swap(i - 1, j - 1);
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> (self.n - 1 - j)) & 1 == 1
    }

    /// `A x`.
    pub fn apply(&self, x: u32) -> u32 {
        self.rows
            .iter()
            .fold(0, |acc, &r| (acc << 1) | dot(r, x) as u32)
    }

    /// Image of the `j`-th unit vector, i.e. column `j` as a vector.
    pub fn column(&self, j: usize) -> u32 {
        self.apply(1 << (self.n - 1 - j))
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.n).map(|j| self.column(j)).collect();
        Self { n: self.n, rows }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        // row_i(AB) = Σ_k A[i][k] row_k(B)
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                (0..self.n)
                    .filter(|&k| (r >> (self.n - 1 - k)) & 1 == 1)
                    .fold(0, |acc, k| acc ^ other.rows[k])
            })
            .collect();
        Ok(Self { n: self.n, rows })
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in (0..self.n).rev() {
            let bit = 1u32 << col;
            if let Some(p) = (rank..rows.len()).find(|&i| rows[i] & bit != 0) {
                rows.swap(rank, p);
                let pivot = rows[rank];
                for (i, r) in rows.iter_mut().enumerate() {
                    if i != rank && *r & bit != 0 {
                        *r ^= pivot;
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut left = self.rows.clone();
        let mut right = Self::identity(n).rows;
        for c in 0..n {
            let bit = 1u32 << (n - 1 - c);
            let p = (c..n)
                .find(|&i| left[i] & bit != 0)
                .ok_or(Error::SingularMatrix)?;
            left.swap(c, p);
            right.swap(c, p);
            for i in 0..n {
                if i != c && left[i] & bit != 0 {
                    left[i] ^= left[c];
                    right[i] ^= right[c];
                }
            }
        }
        Ok(Self { n, rows: right })
    }
}

/// Draw matrices from a seeded stream until one is invertible.
pub fn random_invertible_matrix(n: usize, seed: u64) -> BinaryMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_invertible_with(n, &mut rng)
}

pub(crate) fn random_invertible_with<R: Rng>(n: usize, rng: &mut R) -> BinaryMatrix {
    let mask = if n >= 32 { u32::MAX } else { (1u32 << n) - 1 };
    loop {
        let rows = (0..n).map(|_| rng.gen::<u32>() & mask).collect();
        let m = BinaryMatrix { n, rows };
        if m.is_invertible() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        for seed in 0..10 {
            assert_eq!(random_invertible_matrix(1, seed), BinaryMatrix::identity(1));
        }
    }

    #[test]
    fn seeded_and_full_rank() {
        let a = random_invertible_matrix(4, 42);
        assert_eq!(a.rank(), 4);
        assert_eq!(a, random_invertible_matrix(4, 42));
    }

    #[test]
    fn inverse_roundtrip() {
        for seed in 0..50 {
            let a = random_invertible_matrix(7, seed);
            let inv = a.inverse().unwrap();
            assert_eq!(a.mul(&inv).unwrap(), BinaryMatrix::identity(7));
            for x in 0..128 {
                assert_eq!(inv.apply(a.apply(x)), x);
            }
        }
    }

    #[test]
    fn singular_detected() {
        let m = BinaryMatrix::from_rows(3, vec![0b110, 0b011, 0b101]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn apply_and_transpose() {
        // rows (1,1,0), (0,1,0), (0,0,1)
        let m = BinaryMatrix::from_rows(3, vec![0b110, 0b010, 0b001]).unwrap();
        assert_eq!(m.apply(0b010), 0b110);
        assert_eq!(m.apply(0b100), 0b100);
        assert_eq!(m.column(1), 0b110);
        let t = m.transpose();
        assert_eq!(t.rows(), &[0b100, 0b110, 0b001]);
        let s = BinaryMatrix::swap(3, 1, 3).unwrap();
        assert_eq!(s.apply(0b100), 0b001);
    }
}

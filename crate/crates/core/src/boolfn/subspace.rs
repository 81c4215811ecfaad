use super::function::BooleanFunction;
use super::walsh::{fwht_in_place, WalshSpectrum};
use crate::error::{Error, Result};
use crate::vector::{coord_mask, deposit, extract};

/// A coordinate subspace `Γ` (the listed coordinates are free, the rest are
/// fixed to 0) together with its orthogonal complement `Γ^⊥`, spanned by the
/// remaining coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubspacePair {
    n: usize,
    gamma_coords: Vec<usize>,
}

impl SubspacePair {
    pub fn new(n: usize, mut coords: Vec<usize>) -> Result<Self> {
        coords.sort_unstable();
        coords.dedup();
        if let Some(&c) = coords.iter().find(|&&c| c == 0 || c > n) {
            return Err(Error::BadCoordinate { coord: c, n });
        }
        Ok(Self {
            n,
            gamma_coords: coords,
        })
    }

    /// The subspace whose complement is spanned by `perp_coords`.
    pub fn from_perp(n: usize, perp_coords: &[usize]) -> Result<Self> {
        let coords = (1..=n).filter(|c| !perp_coords.contains(c)).collect();
        if let Some(&c) = perp_coords.iter().find(|&&c| c == 0 || c > n) {
            return Err(Error::BadCoordinate { coord: c, n });
        }
        Self::new(n, coords)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gamma_coords(&self) -> &[usize] {
        &self.gamma_coords
    }

    pub fn dim(&self) -> usize {
        self.gamma_coords.len()
    }

    pub fn gamma_mask(&self) -> u32 {
        self.gamma_coords
            .iter()
            .fold(0, |m, &c| m | coord_mask(self.n, c))
    }

    pub fn perp_mask(&self) -> u32 {
        ((1u32 << self.n) - 1) & !self.gamma_mask()
    }
}

/// Signed sums `Σ_{x ∈ a ⊕ Γ^⊥} (-1)^{f(x)}`, one per coset of `Γ^⊥`.
///
/// Cosets are indexed by the compressed `Γ` coordinates of their
/// representative `a` (the unique coset member with all `Γ^⊥` coordinates 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSums {
    gamma: SubspacePair,
    sums: Vec<i64>,
}

impl CosetSums {
    pub fn subspace(&self) -> &SubspacePair {
        &self.gamma
    }

    pub fn sums(&self) -> &[i64] {
        &self.sums
    }

    /// Sum of the coset containing `x`.
    pub fn get(&self, x: u32) -> i64 {
        self.sums[extract(x, self.gamma.gamma_mask()) as usize]
    }

    /// `(representative, sum)` pairs in ascending representative order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        let mask = self.gamma.gamma_mask();
        self.sums
            .iter()
            .enumerate()
            .map(move |(i, &s)| (deposit(i as u32, mask), s))
    }
}

/// Coset sums computed directly from the truth table.
pub fn coset_signed_sums(f: &BooleanFunction, gamma: &SubspacePair) -> Result<CosetSums> {
    if gamma.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            got: gamma.n(),
        });
    }
    let mask = gamma.gamma_mask();
    let mut sums = vec![0i64; 1 << gamma.dim()];
    for x in 0..f.len() as u32 {
        sums[extract(x, mask) as usize] += f.sign(x) as i64;
    }
    Ok(CosetSums {
        gamma: gamma.clone(),
        sums,
    })
}

/// Coset sums from the spectrum restricted to `Γ`:
/// `2^{-dim Γ} Σ_{y ∈ Γ} W(y) (-1)^{⟨y,a⟩}`.
pub fn coset_sums_from_spectrum(w: &WalshSpectrum<i32>, gamma: &SubspacePair) -> Result<CosetSums> {
    if gamma.n() != w.n() {
        return Err(Error::DimensionMismatch {
            expected: w.n(),
            got: gamma.n(),
        });
    }
    let mask = gamma.gamma_mask();
    let restricted: Vec<i64> = (0..1u32 << gamma.dim())
        .map(|q| w.get(deposit(q, mask)) as i64)
        .collect();
    let sums = sums_from_restricted(&restricted, gamma.dim())?;
    Ok(CosetSums {
        gamma: gamma.clone(),
        sums,
    })
}

/// Shared core: restricted spectrum values in compressed order to coset sums.
pub(crate) fn sums_from_restricted(restricted: &[i64], dim: usize) -> Result<Vec<i64>> {
    let mut vals = restricted.to_vec();
    fwht_in_place(&mut vals);
    let scale = 1i64 << dim;
    vals.into_iter()
        .map(|v| {
            if v % scale != 0 {
                Err(Error::NotBooleanSpectrum)
            } else {
                Ok(v / scale)
            }
        })
        .collect()
}

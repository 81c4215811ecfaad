//! Spectrum part: the Walsh spectrum restricted to the `(n-2)`-dimensional
//! coordinate subspace orthogonal to the chosen face.
//!
//! Layout: support size `k` in `bit_length(N)` bits, the lexicographic rank
//! of the support among `k`-subsets of the `N` positions in
//! `⌈log₂ C(N,k)⌉` bits, then one sign bit per support position (1 =
//! negative). All nonzero values share the magnitude `2^{(n+s)/2}`.

use super::bits::{BitBuf, BitReader};
use super::enumerative::{rank_subset, rank_width, unrank_subset};
use crate::boolfn::WalshSpectrum;
use crate::error::{Error, Result};
use crate::stats::Face;
use crate::vector::{bit_length, deposit};

/// Bits used by a support/sign code over `universe` positions with `k` nonzero.
pub fn spectrum_part_bits(universe: usize, k: usize) -> usize {
    bit_length(universe as u64) + rank_width(universe, k) + k
}

pub(crate) fn magnitude(n: usize, s: usize) -> Result<i64> {
    if (n + s) % 2 != 0 || s > n {
        return Err(Error::ParityMismatch { n, s });
    }
    Ok(1i64 << ((n + s) / 2))
}

/// Encode `values` (each `0` or `±magnitude`) as support plus signs.
pub(crate) fn encode_support_signs(values: &[i64], magnitude: i64, out: &mut BitBuf) -> Result<usize> {
    let universe = values.len();
    if values.iter().any(|&v| v != 0 && v.abs() != magnitude) {
        return Err(Error::NotPlateauedOnFace);
    }
    let support: Vec<usize> = (0..universe).filter(|&i| values[i] != 0).collect();
    let k = support.len();
    out.write(k as u64, bit_length(universe as u64));
    out.write_big(&rank_subset(universe, &support)?, rank_width(universe, k));
    for &i in &support {
        out.push(values[i] < 0);
    }
    Ok(k)
}

pub(crate) fn decode_support_signs(
    reader: &mut BitReader<'_>,
    universe: usize,
    magnitude: i64,
) -> Result<Vec<i64>> {
    let k = reader.read(bit_length(universe as u64))? as usize;
    if k > universe {
        return Err(Error::MalformedStream(format!(
            "support size {k} exceeds {universe}"
        )));
    }
    let rank = reader.read_big(rank_width(universe, k))?;
    let support = unrank_subset(universe, k, &rank)
        .map_err(|_| Error::MalformedStream("support rank out of range".into()))?;
    let mut values = vec![0i64; universe];
    for i in support {
        values[i] = if reader.read_bit()? { -magnitude } else { magnitude };
    }
    Ok(values)
}

/// `W` restricted to the subspace spanned by the coordinates outside `face`,
/// in compressed order.
pub fn restrict_spectrum(w: &WalshSpectrum<i32>, face: &Face) -> Vec<i64> {
    let rest = face.rest_mask();
    (0..face.translate_count() as u32)
        .map(|q| w.get(deposit(q, rest)) as i64)
        .collect()
}

/// Encode the spectrum of an `s`-plateaued function restricted to the
/// complement of `face`. Returns the bits and the support size.
pub fn encode_spectrum_restriction(
    w: &WalshSpectrum<i32>,
    face: &Face,
    s: usize,
) -> Result<(BitBuf, usize)> {
    if face.n() != w.n() {
        return Err(Error::DimensionMismatch {
            expected: w.n(),
            got: face.n(),
        });
    }
    let mag = magnitude(w.n(), s)?;
    let mut out = BitBuf::new();
    let k = encode_support_signs(&restrict_spectrum(w, face), mag, &mut out)?;
    Ok((out, k))
}

/// Inverse of [`encode_spectrum_restriction`]; returns the restricted
/// values in compressed order.
pub fn decode_spectrum_restriction(
    reader: &mut BitReader<'_>,
    face: &Face,
    s: usize,
) -> Result<Vec<i64>> {
    let mag = magnitude(face.n(), s)?;
    decode_support_signs(reader, face.translate_count(), mag)
}

//! Face part: the four values on each face translate, given their sign sum.
//!
//! A sum of `±4` fixes the face. A sum of `±2` leaves the position of the
//! single minority value, written in 2 bits. A sum of 0 leaves one of the six
//! placements of the two zeros; those digits are packed into a single
//! mixed-radix integer, first face most significant, written after all 2-bit
//! fields in `bit_length(6^m - 1)` bits.

use super::bits::{BitBuf, BitReader};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// Positions of the two zeros of a balanced face, in digit order.
const ZERO_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Function values on one face translate, in local point order.
pub type FaceValues = [bool; 4];

/// How many faces of each kind a face part covered.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FaceCounts {
    pub constant: usize,
    pub odd: usize,
    pub balanced: usize,
}

/// Bits used by a face part with `odd` two-bit faces and `balanced` base-6 digits.
pub fn face_part_bits(odd: usize, balanced: usize) -> usize {
    2 * odd + base6_width(balanced)
}

fn base6_width(m: usize) -> usize {
    (BigUint::from(6u32).pow(m as u32) - 1u32).bits() as usize
}

/// `Σ (-1)^{v}` over the four values.
pub fn face_sum(values: &FaceValues) -> i64 {
    values.iter().map(|&v| if v { -1 } else { 1 }).sum()
}

/// Encode each face given its sign sum. Fails with `SumMismatch` if a sum is
/// outside `{0, ±2, ±4}` or disagrees with the values.
pub fn encode_faces(faces: &[FaceValues], sums: &[i64]) -> Result<(BitBuf, FaceCounts)> {
    if faces.len() != sums.len() {
        return Err(Error::DimensionMismatch {
            expected: faces.len(),
            got: sums.len(),
        });
    }
    let mut out = BitBuf::new();
    let mut counts = FaceCounts::default();
    let mut digits = BigUint::zero();
    for (vals, &sum) in faces.iter().zip(sums) {
        if !matches!(sum, -4 | -2 | 0 | 2 | 4) || face_sum(vals) != sum {
            return Err(Error::SumMismatch(sum));
        }
        match sum {
            4 | -4 => counts.constant += 1,
            2 | -2 => {
                // the minority value is 1 when the sum is positive
                let minority = sum > 0;
                let pos = vals.iter().position(|&v| v == minority).unwrap();
                out.write(pos as u64, 2);
                counts.odd += 1;
            }
            _ => {
                let zeros: Vec<usize> = (0..4).filter(|&k| !vals[k]).collect();
                let d = ZERO_PAIRS.iter().position(|&p| p == (zeros[0], zeros[1])).unwrap();
                digits = digits * 6u32 + d as u32;
                counts.balanced += 1;
            }
        }
    }
    out.write_big(&digits, base6_width(counts.balanced));
    Ok((out, counts))
}

/// Inverse of [`encode_faces`].
pub fn decode_faces(reader: &mut BitReader<'_>, sums: &[i64]) -> Result<(Vec<FaceValues>, FaceCounts)> {
    let mut faces = Vec::with_capacity(sums.len());
    let mut counts = FaceCounts::default();
    for &sum in sums {
        let vals = match sum {
            4 => {
                counts.constant += 1;
                [false; 4]
            }
            -4 => {
                counts.constant += 1;
                [true; 4]
            }
            2 | -2 => {
                counts.odd += 1;
                let minority = sum > 0;
                let pos = reader.read(2)? as usize;
                let mut v = [!minority; 4];
                v[pos] = minority;
                v
            }
            0 => {
                counts.balanced += 1;
                [false; 4]
            }
            other => return Err(Error::SumMismatch(other)),
        };
        faces.push(vals);
    }
    let mut digits = reader.read_big(base6_width(counts.balanced))?;
    if digits >= BigUint::from(6u32).pow(counts.balanced as u32) {
        return Err(Error::MalformedStream("face digits out of range".into()));
    }
    for (vals, _) in faces.iter_mut().zip(sums).rev().filter(|(_, &s)| s == 0) {
        let d = (&digits % 6u32).to_usize().unwrap();
        digits /= 6u32;
        let (a, b) = ZERO_PAIRS[d];
        *vals = [true; 4];
        vals[a] = false;
        vals[b] = false;
    }
    Ok((faces, counts))
}

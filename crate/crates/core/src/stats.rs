//! Two-dimensional subspace statistics: the odd-parity census through a
//! point, zero-count histograms over translates of a coordinate face, and the
//! per-face bit cost of recovering values from face sums.

use crate::boolfn::{classify_plateau, BooleanFunction, PlateauClass};
use crate::error::{Error, Result};
use crate::vector::{coord_mask, deposit, weight};
use crate::Rational;
use num_traits::{ToPrimitive, Zero};
use serde_json::json;

/// An axis-aligned 2-dimensional face direction `span{e_i, e_j}`, `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    n: usize,
    i: usize,
    j: usize,
}

impl Face {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        let (i, j) = (i.min(j), i.max(j));
        if i == 0 {
            return Err(Error::BadCoordinate { coord: 0, n });
        }
        if j > n {
            return Err(Error::BadCoordinate { coord: j, n });
        }
        if i == j {
            return Err(Error::BadCoordinate { coord: j, n });
        }
        Ok(Self { n, i, j })
    }

    /// Every face direction in lexicographic order of its coordinate pair.
    pub fn all(n: usize) -> impl Iterator<Item = Face> {
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| Face { n, i, j }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn mask_i(&self) -> u32 {
        coord_mask(self.n, self.i)
    }

    pub fn mask_j(&self) -> u32 {
        coord_mask(self.n, self.j)
    }

    /// Mask of the `n - 2` coordinates outside the face.
    pub fn rest_mask(&self) -> u32 {
        ((1u32 << self.n) - 1) & !(self.mask_i() | self.mask_j())
    }

    /// Number of translates, `2^{n-2}`.
    pub fn translate_count(&self) -> usize {
        1 << (self.n - 2)
    }

    /// Points of translate `p` (compressed outside coordinates), ordered by
    /// local index `2·x_i + x_j`.
    pub fn points(&self, p: u32) -> [u32; 4] {
        let base = deposit(p, self.rest_mask());
        let (mi, mj) = (self.mask_i(), self.mask_j());
        [base, base | mj, base | mi, base | mi | mj]
    }

    /// Number of points of translate `p` where `f` is zero.
    pub fn zero_count(&self, f: &BooleanFunction, p: u32) -> usize {
        self.points(p).iter().filter(|&&x| !f.get(x)).count()
    }
}

/// Which translates of a face a statistic ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceRegion {
    All,
    /// Translates whose outside coordinates have weight at most `r`.
    Ball(usize),
}

impl FaceRegion {
    pub fn contains(&self, p: u32) -> bool {
        match *self {
            FaceRegion::All => true,
            FaceRegion::Ball(r) => weight(p) as usize <= r,
        }
    }

    /// Compressed translate indices in ascending order.
    pub fn translates(self, face: &Face) -> impl Iterator<Item = u32> {
        (0..face.translate_count() as u32).filter(move |&p| self.contains(p))
    }
}

/// Number of 2-flats through a point and how many hold an odd number of
/// zeros of `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceCensus {
    pub v: u64,
    pub s: u64,
    pub fraction: Rational,
}

impl SubspaceCensus {
    pub fn to_json(&self, histogram: Option<&FaceHistogram>) -> serde_json::Value {
        let mut out = json!({
            "V": self.v,
            "S": self.s,
            "fraction": format!("{}/{}", self.fraction.numer(), self.fraction.denom()),
        });
        if let Some(h) = histogram {
            out["histogram"] = h.to_json();
        }
        out
    }
}

/// `(2ⁿ - 1)(2ⁿ - 2) / 6`, the number of 2-flats through a point.
pub fn flats_through_point(n: usize) -> u64 {
    let m = (1u64 << n) - 1;
    m * (m - 1) / 6
}

/// Closed form `1/2 - (2^{n+s} - 3·2ⁿ + 2) / (2 (2ⁿ - 1)(2ⁿ - 2))`.
pub fn census_closed_form(n: usize, s: usize) -> Rational {
    let p = 1i64 << n;
    let num = (1i64 << (n + s)) - 3 * p + 2;
    let den = 2 * (p - 1) * (p - 2);
    Rational::new(1, 2) - Rational::new(num, den)
}

/// Count flats `{x, x⊕y, x⊕z, x⊕y⊕z}` with an odd number of zeros, over
/// ordered pairs of distinct nonzero directions (each flat appears 6 times).
fn odd_flats_through(f: &BooleanFunction, x: u32) -> u64 {
    let len = f.len() as u32;
    let fx = f.get(x);
    let mut odd_ordered = 0u64;
    for y in 1..len {
        let fy = f.get(x ^ y);
        for z in 1..len {
            if z == y {
                continue;
            }
            // odd zero count over 4 points <=> odd sum of values
            if fx ^ fy ^ f.get(x ^ z) ^ f.get(x ^ y ^ z) {
                odd_ordered += 1;
            }
        }
    }
    debug_assert_eq!(odd_ordered % 6, 0);
    odd_ordered / 6
}

/// Brute-force `S(x)/V` for a plateaued function.
pub fn odd_parity_fraction(f: &BooleanFunction, x: u32) -> Result<SubspaceCensus> {
    if f.n() < 2 {
        return Err(Error::OutOfRange("2-flats need n >= 2".into()));
    }
    if x as usize >= f.len() {
        return Err(Error::OutOfRange(format!("point {x} not in F_2^{}", f.n())));
    }
    if classify_plateau(f) == PlateauClass::NotPlateaued {
        return Err(Error::NotPlateaued);
    }
    let v = flats_through_point(f.n());
    let s = odd_flats_through(f, x);
    Ok(SubspaceCensus {
        v,
        s,
        fraction: Rational::new(s as i64, v as i64),
    })
}

/// Zero-count histogram of `f` over the translates of a face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceHistogram {
    pub face: Face,
    pub region: FaceRegion,
    /// `counts[z]` = number of translates with `z` zeros.
    pub counts: [u64; 5],
}

impl FaceHistogram {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn odd(&self) -> u64 {
        self.counts[1] + self.counts[3]
    }

    pub fn even(&self) -> u64 {
        self.counts[0] + self.counts[2] + self.counts[4]
    }

    /// Translates with 0 or 4 zeros (face sum `±4`).
    pub fn constant(&self) -> u64 {
        self.counts[0] + self.counts[4]
    }

    /// Translates with exactly 2 zeros (face sum 0).
    pub fn balanced(&self) -> u64 {
        self.counts[2]
    }

    pub fn odd_fraction(&self) -> Option<Rational> {
        (self.total() > 0).then(|| Rational::new(self.odd() as i64, self.total() as i64))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let region = match self.region {
            FaceRegion::All => json!("all"),
            FaceRegion::Ball(r) => json!({ "ball": r }),
        };
        json!({
            "face": [self.face.i, self.face.j],
            "region": region,
            "counts": {
                "0": self.counts[0], "1": self.counts[1], "2": self.counts[2],
                "3": self.counts[3], "4": self.counts[4],
            },
        })
    }
}

pub fn face_histogram(f: &BooleanFunction, face: Face, region: FaceRegion) -> Result<FaceHistogram> {
    if face.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            got: face.n(),
        });
    }
    let mut counts = [0u64; 5];
    for p in region.translates(&face) {
        counts[face.zero_count(f, p)] += 1;
    }
    Ok(FaceHistogram {
        face,
        region,
        counts,
    })
}

/// A bit count of the form `rational + log2_6 · log₂6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BitCost {
    pub rational: Rational,
    pub log2_6: Rational,
}

impl BitCost {
    pub fn to_f64(&self) -> f64 {
        self.rational.to_f64().unwrap() + self.log2_6.to_f64().unwrap() * 6f64.log2()
    }

    /// Whether the cost is at most `α + extra` with `α = 1 + (3/8) log₂6`.
    pub fn at_most_alpha_plus(&self, extra: Rational) -> bool {
        let da = self.rational - Rational::from_integer(1) - extra;
        let db = Rational::new(3, 8) - self.log2_6;
        // need da <= db · log₂6
        if db.is_zero() {
            return da <= Rational::zero();
        }
        let lhs = da.to_f64().unwrap();
        let rhs = db.to_f64().unwrap() * 6f64.log2();
        lhs <= rhs
    }
}

/// Average bits per face needed to recover four values from their sum:
/// `log₂6` for two zeros, 2 for an odd count, 0 for a constant face.
pub fn per_face_bit_cost(h: &FaceHistogram) -> Result<BitCost> {
    let total = h.total();
    if total == 0 {
        return Err(Error::EmptyRegion);
    }
    let t = total as i64;
    Ok(BitCost {
        rational: Rational::new(2 * h.odd() as i64, t),
        log2_6: Rational::new(h.balanced() as i64, t),
    })
}

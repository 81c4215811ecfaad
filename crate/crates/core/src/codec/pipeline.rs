//! Encode and decode pipelines.

use super::ball::{reconstruct_from_ball, BallValues};
use super::bits::{BitBuf, BitReader};
use super::faces::{decode_faces, encode_faces, face_part_bits, FaceCounts, FaceValues};
use super::spectrum::{
    decode_spectrum_restriction, decode_support_signs, encode_spectrum_restriction,
    encode_support_signs, magnitude, restrict_spectrum, spectrum_part_bits,
};
use super::stream::{CodecBitstream, Mode, TransformRecord};
use crate::affine::{apply_affine, invert_transform, normalize_ea_with, AffineTransform};
use crate::boolfn::{
    classify_plateau, dual_bent, inverse_walsh, restrict_to_hyperplane, sums_from_restricted,
    unit, walsh_transform, BooleanFunction, PlateauClass, WalshSpectrum,
};
use crate::error::{Error, Result};
use crate::stats::{Face, FaceRegion};
use crate::vector::{deposit, weight};

/// Ball radius for the face part of an `s`-plateaued function: the degree
/// bound `(n-s)/2 + 1`, capped at `n`.
pub fn plateaued_radius(n: usize, s: usize) -> usize {
    ((n - s) / 2 + 1).min(n)
}

/// Ball radius for the pair part of a bent function: `n/2`, except `n = 2`
/// where bent functions are quadratic.
pub fn bent_radius(n: usize) -> usize {
    if n == 2 {
        2
    } else {
        n / 2
    }
}

/// Counts gathered while decoding, used by the length report.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecodeTrace {
    /// Positions covered by the spectrum part.
    pub universe: usize,
    /// Nonzero spectrum values stored.
    pub support: usize,
    pub faces: FaceCounts,
    /// Pairs with sum 0 inside the ball (bent-dual only).
    pub zero_sum_pairs: usize,
}

struct PlateauedParts {
    record: TransformRecord,
    spectrum: BitBuf,
    faces: BitBuf,
}

impl PlateauedParts {
    fn payload_bits(&self) -> usize {
        self.spectrum.len() + self.faces.len()
    }
}

fn malformed(e: Error) -> Error {
    match e {
        Error::MalformedStream(_) => e,
        other => Error::MalformedStream(other.to_string()),
    }
}

fn region_faces(g: &BooleanFunction, face: &Face, r: usize) -> Vec<FaceValues> {
    FaceRegion::Ball(r)
        .translates(face)
        .map(|p| face.points(p).map(|x| g.get(x)))
        .collect()
}

fn encode_for_face(g: &BooleanFunction, s: usize, face: Face, r: usize) -> Result<(BitBuf, BitBuf)> {
    let w = walsh_transform(g);
    let (spectrum, _) = encode_spectrum_restriction(&w, &face, s)?;
    let all_sums = sums_from_restricted(&restrict_spectrum(&w, &face), g.n() - 2)?;
    let sums: Vec<i64> = FaceRegion::Ball(r)
        .translates(&face)
        .map(|p| all_sums[p as usize])
        .collect();
    let (faces, _) = encode_faces(&region_faces(g, &face, r), &sums)?;
    Ok((spectrum, faces))
}

fn encode_plateaued_parts(f: &BooleanFunction, s: usize, seed: u64) -> Result<PlateauedParts> {
    let n = f.n();
    if n == 1 {
        let w = walsh_transform(f);
        let vals: Vec<i64> = w.values().iter().map(|&v| v as i64).collect();
        let mut spectrum = BitBuf::new();
        encode_support_signs(&vals, magnitude(1, s)?, &mut spectrum)?;
        return Ok(PlateauedParts {
            record: TransformRecord {
                transform: AffineTransform::identity(1),
                coords: (1, 1),
            },
            spectrum,
            faces: BitBuf::new(),
        });
    }
    let r = plateaued_radius(n, s);
    let universe = 1usize << (n - 2);
    let mut best: Option<PlateauedParts> = None;
    let mut last_err = None;
    for face in Face::all(n) {
        let cost = |g: &BooleanFunction, h: &crate::stats::FaceHistogram| {
            let w = walsh_transform(g);
            let k = restrict_spectrum(&w, &face).iter().filter(|&&v| v != 0).count();
            (spectrum_part_bits(universe, k) + face_part_bits(h.odd() as usize, h.balanced() as usize))
                as u64
        };
        let (g, cert) = match normalize_ea_with(f, s, face, r, seed, cost) {
            Ok(found) => found,
            Err(e @ Error::SearchExhausted { .. }) => {
                last_err = Some(e);
                continue;
            }
            Err(e) => return Err(e),
        };
        let (spectrum, faces) = encode_for_face(&g, s, face, r)?;
        let parts = PlateauedParts {
            record: TransformRecord {
                transform: cert.transform,
                coords: face.coords(),
            },
            spectrum,
            faces,
        };
        if best.as_ref().map_or(true, |b| parts.payload_bits() < b.payload_bits()) {
            best = Some(parts);
        }
    }
    best.ok_or_else(|| last_err.unwrap_or(Error::SearchExhausted { attempts: 0 }))
}

fn decode_plateaued_parts(
    n: usize,
    s: usize,
    record: &TransformRecord,
    spectrum: &mut BitReader<'_>,
    faces: &mut BitReader<'_>,
    trace: &mut DecodeTrace,
) -> Result<BooleanFunction> {
    if n == 1 {
        let vals = decode_support_signs(spectrum, 2, magnitude(1, s)?)?;
        trace.universe = 2;
        trace.support = vals.iter().filter(|&&v| v != 0).count();
        let w = WalshSpectrum::from_values(1, vals.iter().map(|&v| v as i32).collect())?;
        return inverse_walsh(&w).map_err(malformed);
    }
    let face = Face::new(n, record.coords.0, record.coords.1).map_err(malformed)?;
    let r = plateaued_radius(n, s);
    let restricted = decode_spectrum_restriction(spectrum, &face, s)?;
    trace.universe = restricted.len();
    trace.support = restricted.iter().filter(|&&v| v != 0).count();
    let all_sums = sums_from_restricted(&restricted, n - 2).map_err(malformed)?;
    let translates: Vec<u32> = FaceRegion::Ball(r).translates(&face).collect();
    let sums: Vec<i64> = translates.iter().map(|&p| all_sums[p as usize]).collect();
    let (values, counts) = decode_faces(faces, &sums).map_err(malformed)?;
    trace.faces = counts;

    let mut table = BooleanFunction::zero(n)?;
    for (&p, vals) in translates.iter().zip(&values) {
        for (x, v) in face.points(p).into_iter().zip(vals) {
            table.set(x, *v);
        }
    }
    let g = reconstruct_from_ball(&BallValues::from_function(&table, r)?)?;
    let consistent = (0..face.translate_count() as u32).all(|p| {
        face.points(p).iter().map(|&x| g.sign(x) as i64).sum::<i64>() == all_sums[p as usize]
    });
    if !consistent || classify_plateau(&g) != PlateauClass::Plateaued(s as u32) {
        return Err(Error::MalformedStream("decoded function fails consistency check".into()));
    }
    apply_affine(&g, &invert_transform(&record.transform)?)
}

/// Encode an `s`-plateaued function through EA normalization, the spectrum
/// restricted to an `(n-2)`-dimensional coordinate subspace, and face values
/// on the ball of radius `(n-s)/2 + 1`.
///
/// Every coordinate pair is tried as the face; the shortest payload wins,
/// ties going to the lexicographically first pair.
pub fn encode_plateaued(f: &BooleanFunction, seed: u64) -> Result<CodecBitstream> {
    let s = match classify_plateau(f) {
        PlateauClass::Plateaued(s) => s as usize,
        PlateauClass::NotPlateaued => return Err(Error::NotPlateaued),
    };
    let parts = encode_plateaued_parts(f, s, seed)?;
    let mut transform = BitBuf::new();
    parts.record.write(&mut transform);
    Ok(CodecBitstream {
        n: f.n(),
        s,
        mode: Mode::PlateauedDirect,
        transform,
        spectrum: parts.spectrum,
        faces: parts.faces,
        pairs: None,
    })
}

/// Pair representatives (`x_i = 0`) inside the ball, ascending.
fn pair_reps(n: usize, i: usize, r: usize) -> Vec<u32> {
    let rest = ((1u32 << n) - 1) & !unit(n, i);
    (0..1u32 << (n - 1))
        .map(|q| deposit(q, rest))
        .filter(|&x| weight(x) as usize <= r)
        .collect()
}

struct DualCandidate {
    translation: u32,
    inner: PlateauedParts,
    pairs: BitBuf,
}

/// Encode a bent function through its dual.
///
/// For a coordinate direction `a = e_i`, the dual restricted to `x_i = 0` is
/// a near-bent function of `n - 1` variables and fixes every pair sum
/// `(-1)^{f(x)} + (-1)^{f(x⊕a)}`. Pairs with sum `±2` are then known and each
/// zero-sum pair in the ball of radius `n/2` costs one bit. A translation of
/// the input is chosen first to minimize those zero-sum pairs, then `i` to
/// minimize the total.
pub fn encode_bent_dual(f: &BooleanFunction, seed: u64) -> Result<CodecBitstream> {
    let n = f.n();
    if !classify_plateau(f).is_bent() {
        return Err(Error::NotBent);
    }
    let r = bent_radius(n);
    let mut best: Option<(usize, usize, DualCandidate)> = None;
    for i in 1..=n {
        let a = unit(n, i);
        let reps = pair_reps(n, i, r);
        let translation = (0..1u32 << n)
            .min_by_key(|&e| reps.iter().filter(|&&x| f.get(x ^ e) != f.get(x ^ e ^ a)).count())
            .unwrap();
        let shifted = apply_affine(f, &AffineTransform::translation(n, translation))?;
        let h = restrict_to_hyperplane(&dual_bent(&shifted)?, i)?;
        let inner = encode_plateaued_parts(&h, 1, seed)?;
        let mut pairs = BitBuf::new();
        for &x in &reps {
            if shifted.get(x) != shifted.get(x ^ a) {
                pairs.push(shifted.get(x));
            }
        }
        let total = inner.payload_bits() + pairs.len();
        if best.as_ref().map_or(true, |b| total < b.0) {
            best = Some((
                total,
                i,
                DualCandidate {
                    translation,
                    inner,
                    pairs,
                },
            ));
        }
    }
    let (_, i, cand) = best.expect("n ≥ 2 gives at least one direction");
    let mut transform = BitBuf::new();
    TransformRecord {
        transform: AffineTransform::translation(n, cand.translation),
        coords: (i, i),
    }
    .write(&mut transform);
    cand.inner.record.write(&mut transform);
    Ok(CodecBitstream {
        n,
        s: 0,
        mode: Mode::BentDual,
        transform,
        spectrum: cand.inner.spectrum,
        faces: cand.inner.faces,
        pairs: Some(cand.pairs),
    })
}

fn decode_plateaued_stream(b: &CodecBitstream, trace: &mut DecodeTrace) -> Result<BooleanFunction> {
    let mut tr = b.transform.reader();
    let record = TransformRecord::read(&mut tr, b.n)?;
    tr.finish()?;
    let mut sr = b.spectrum.reader();
    let mut fr = b.faces.reader();
    let f = decode_plateaued_parts(b.n, b.s, &record, &mut sr, &mut fr, trace)?;
    sr.finish()?;
    fr.finish()?;
    Ok(f)
}

fn decode_bent_dual_stream(b: &CodecBitstream, trace: &mut DecodeTrace) -> Result<BooleanFunction> {
    let n = b.n;
    let pairs = b
        .pairs
        .as_ref()
        .ok_or_else(|| Error::MalformedStream("missing pair section".into()))?;
    let mut tr = b.transform.reader();
    let outer = TransformRecord::read(&mut tr, n)?;
    let inner = TransformRecord::read(&mut tr, n - 1)?;
    tr.finish()?;
    let (i, i2) = outer.coords;
    if i != i2 {
        return Err(Error::MalformedStream("bent-dual direction coordinates differ".into()));
    }
    let mut sr = b.spectrum.reader();
    let mut fr = b.faces.reader();
    let h = decode_plateaued_parts(n - 1, 1, &inner, &mut sr, &mut fr, trace)?;
    sr.finish()?;
    fr.finish()?;

    let mag = 1i64 << (n / 2);
    let restricted: Vec<i64> = (0..h.len() as u32).map(|q| mag * h.sign(q) as i64).collect();
    let sums = sums_from_restricted(&restricted, n - 1).map_err(malformed)?;
    let a = unit(n, i);
    let rest = ((1u32 << n) - 1) & !a;
    let r = bent_radius(n);
    let mut table = BooleanFunction::zero(n)?;
    let mut pr = pairs.reader();
    for (q, &sum) in sums.iter().enumerate() {
        let x = deposit(q as u32, rest);
        if weight(x) as usize > r {
            continue;
        }
        let (u, v) = match sum {
            2 => (false, false),
            -2 => (true, true),
            0 => {
                trace.zero_sum_pairs += 1;
                let bit = pr.read_bit()?;
                (bit, !bit)
            }
            other => return Err(Error::MalformedStream(format!("pair sum {other}"))),
        };
        table.set(x, u);
        table.set(x ^ a, v);
    }
    pr.finish()?;
    let shifted = reconstruct_from_ball(&BallValues::from_function(&table, r)?)?;
    let consistent = sums.iter().enumerate().all(|(q, &sum)| {
        let x = deposit(q as u32, rest);
        (shifted.sign(x) + shifted.sign(x ^ a)) as i64 == sum
    });
    if !consistent || !classify_plateau(&shifted).is_bent() {
        return Err(Error::MalformedStream("decoded function fails consistency check".into()));
    }
    apply_affine(&shifted, &invert_transform(&outer.transform)?)
}

/// Decode a stream of either mode, also returning the counts seen.
pub fn decode_with_trace(b: &CodecBitstream) -> Result<(BooleanFunction, DecodeTrace)> {
    let mut trace = DecodeTrace::default();
    let f = match b.mode {
        Mode::PlateauedDirect => decode_plateaued_stream(b, &mut trace),
        Mode::BentDual => decode_bent_dual_stream(b, &mut trace),
    }
    .map_err(malformed)?;
    Ok((f, trace))
}

/// Decode a plateaued-direct stream.
pub fn decode_plateaued(b: &CodecBitstream) -> Result<BooleanFunction> {
    if b.mode != Mode::PlateauedDirect {
        return Err(Error::MalformedStream("not a plateaued-direct stream".into()));
    }
    Ok(decode_with_trace(b)?.0)
}

/// Decode a bent-dual stream.
pub fn decode_bent_dual(b: &CodecBitstream) -> Result<BooleanFunction> {
    if b.mode != Mode::BentDual {
        return Err(Error::MalformedStream("not a bent-dual stream".into()));
    }
    Ok(decode_with_trace(b)?.0)
}

/// Decode either mode.
pub fn decode(b: &CodecBitstream) -> Result<BooleanFunction> {
    Ok(decode_with_trace(b)?.0)
}

/// Parse and decode serialized bytes.
pub fn decode_bytes(bytes: &[u8]) -> Result<BooleanFunction> {
    decode(&CodecBitstream::from_bytes(bytes)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad_bent() -> BooleanFunction {
        BooleanFunction::from_fn(4, |x| ((x >> 3) & (x >> 2) & 1) ^ ((x >> 1) & x & 1) == 1).unwrap()
    }

    #[test]
    fn radii() {
        assert_eq!(plateaued_radius(4, 0), 3);
        assert_eq!(plateaued_radius(2, 0), 2);
        assert_eq!(plateaued_radius(3, 1), 2);
        assert_eq!(plateaued_radius(1, 1), 1);
        assert_eq!(bent_radius(8), 4);
        assert_eq!(bent_radius(2), 2);
    }

    #[test]
    fn quadratic_bent_both_paths() {
        let f = quad_bent();
        let p = encode_plateaued(&f, 1).unwrap();
        assert_eq!(decode(&p).unwrap(), f);
        assert!(p.spectrum.len() + p.faces.len() <= 16);
        let d = encode_bent_dual(&f, 1).unwrap();
        assert_eq!(decode(&d).unwrap(), f);
        assert_eq!(decode_bytes(&d.to_bytes()).unwrap(), f);
    }

    #[test]
    fn every_function_on_one_and_two_variables() {
        for n in 1..=2 {
            for t in 0..1u64 << (1 << n) {
                let f = BooleanFunction::from_u64(n, t).unwrap();
                let b = encode_plateaued(&f, 3).unwrap();
                assert_eq!(decode_bytes(&b.to_bytes()).unwrap(), f, "n={n} t={t}");
                if classify_plateau(&f).is_bent() {
                    let d = encode_bent_dual(&f, 3).unwrap();
                    assert_eq!(decode_bytes(&d.to_bytes()).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn wrong_inputs() {
        let and3 = BooleanFunction::from_u64(3, 0x80).unwrap();
        assert_eq!(encode_plateaued(&and3, 1).unwrap_err(), Error::NotPlateaued);
        let x1 = BooleanFunction::from_u64(2, 0b1100).unwrap();
        assert_eq!(encode_bent_dual(&x1, 1).unwrap_err(), Error::NotBent);
    }

    #[test]
    fn damaged_streams_rejected() {
        let f = quad_bent();
        let bytes = encode_plateaued(&f, 1).unwrap().to_bytes();
        for cut in 0..bytes.len() {
            assert!(matches!(
                decode_bytes(&bytes[..cut]),
                Err(Error::MalformedStream(_))
            ));
        }
    }
}

use super::faces::face_part_bits;
use super::pipeline::decode_with_trace;
use super::spectrum::spectrum_part_bits;
use super::stream::CodecBitstream;
use crate::error::Result;
use serde::Serialize;

/// Section lengths of a stream in unpadded bits, with the counts that
/// determine them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthReport {
    pub n: usize,
    pub s: usize,
    pub mode: &'static str,
    /// Magic, n, s, mode and the 32-bit length prefixes.
    pub header_bits: usize,
    pub transform_bits: usize,
    pub spectrum_bits: usize,
    pub face_bits: usize,
    pub pair_bits: usize,
    /// Spectrum, face and pair bits.
    pub payload_bits: usize,
    pub total_bits: usize,
    pub stream_bytes: usize,
    pub spectrum_universe: usize,
    pub support_size: usize,
    pub odd_faces: usize,
    pub balanced_faces: usize,
    pub constant_faces: usize,
    pub zero_sum_pairs: usize,
}

impl LengthReport {
    /// Whether every section has exactly the length its counts predict.
    pub fn accounting_holds(&self) -> bool {
        self.spectrum_bits == spectrum_part_bits(self.spectrum_universe, self.support_size)
            && self.face_bits == face_part_bits(self.odd_faces, self.balanced_faces)
            && self.pair_bits == self.zero_sum_pairs
            && self.total_bits
                == self.header_bits + self.transform_bits + self.payload_bits
    }
}

/// Decode `b` and report its section lengths. Fails with `MalformedStream`
/// when the stream does not decode.
pub fn bitstream_length_report(b: &CodecBitstream) -> Result<LengthReport> {
    let (_, trace) = decode_with_trace(b)?;
    let pair_bits = b.pairs.as_ref().map_or(0, |p| p.len());
    let payload_bits = b.spectrum.len() + b.faces.len() + pair_bits;
    Ok(LengthReport {
        n: b.n,
        s: b.s,
        mode: b.mode.name(),
        header_bits: b.header_bits(),
        transform_bits: b.transform.len(),
        spectrum_bits: b.spectrum.len(),
        face_bits: b.faces.len(),
        pair_bits,
        payload_bits,
        total_bits: b.total_bits(),
        stream_bytes: b.to_bytes().len(),
        spectrum_universe: trace.universe,
        support_size: trace.support,
        odd_faces: trace.faces.odd,
        balanced_faces: trace.faces.balanced,
        constant_faces: trace.faces.constant,
        zero_sum_pairs: trace.zero_sum_pairs,
    })
}

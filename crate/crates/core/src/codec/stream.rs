//! Container format.
//!
//! ```text
//! "BPC1" | n: u8 | s: u8 | mode: u8 | section*
//! section = bit count: u32 big-endian | ⌈count/8⌉ bytes, zero padded
//! ```
//!
//! Sections in order: transform, spectrum, faces, and pairs in bent-dual
//! mode only.

use super::bits::{BitBuf, BitReader};
use crate::affine::{AffineTransform, BinaryMatrix};
use crate::error::{Error, Result};
use crate::vector::ceil_log2;

pub const MAGIC: &[u8; 4] = b"BPC1";

/// Fixed header bits before the sections.
pub const HEADER_BITS: usize = 8 * (MAGIC.len() + 3);

/// Length prefix bits per section.
pub const SECTION_PREFIX_BITS: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Spectrum restriction plus face values of an EA-normalized function.
    PlateauedDirect,
    /// Near-bent restriction of the dual plus pair disambiguation bits.
    BentDual,
}

impl Mode {
    pub fn code(self) -> u8 {
        match self {
            Mode::PlateauedDirect => 0,
            Mode::BentDual => 1,
        }
    }

    pub fn from_code(code: u8) -> Result<Self> {
        match code {
            0 => Ok(Mode::PlateauedDirect),
            1 => Ok(Mode::BentDual),
            c => Err(Error::MalformedStream(format!("unknown mode {c}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::PlateauedDirect => "plateaued-direct",
            Mode::BentDual => "bent-dual",
        }
    }
}

/// A stored transform and the coordinate pair it applies to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformRecord {
    pub transform: AffineTransform,
    /// 1-based coordinates.
    pub coords: (usize, usize),
}

impl TransformRecord {
    /// `m² + 2m + 1 + 2⌈log₂ m⌉` for dimension `m`.
    pub fn bit_len(m: usize) -> usize {
        m * m + 2 * m + 1 + 2 * ceil_log2(m)
    }

    pub(crate) fn write(&self, out: &mut BitBuf) {
        let m = self.transform.n();
        for &row in self.transform.a.rows() {
            out.write(row as u64, m);
        }
        out.write(self.transform.b as u64, m);
        out.write(self.transform.c as u64, m);
        out.push(self.transform.d);
        let w = ceil_log2(m);
        out.write(self.coords.0 as u64 - 1, w);
        out.write(self.coords.1 as u64 - 1, w);
    }

    pub(crate) fn read(reader: &mut BitReader<'_>, m: usize) -> Result<Self> {
        let rows = (0..m)
            .map(|_| reader.read(m).map(|r| r as u32))
            .collect::<Result<Vec<_>>>()?;
        let a = BinaryMatrix::from_rows(m, rows)?;
        if !a.is_invertible() {
            return Err(Error::MalformedStream("stored matrix is singular".into()));
        }
        let b = reader.read(m)? as u32;
        let c = reader.read(m)? as u32;
        let d = reader.read_bit()?;
        let w = ceil_log2(m);
        let i = reader.read(w)? as usize + 1;
        let j = reader.read(w)? as usize + 1;
        if i > m || j > m {
            return Err(Error::MalformedStream(format!("coordinate out of range for n={m}")));
        }
        Ok(Self {
            transform: AffineTransform { a, b, c, d },
            coords: (i, j),
        })
    }
}

/// An encoded function: header fields and raw sections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodecBitstream {
    pub n: usize,
    pub s: usize,
    pub mode: Mode,
    pub transform: BitBuf,
    pub spectrum: BitBuf,
    pub faces: BitBuf,
    /// Present exactly in bent-dual mode.
    pub pairs: Option<BitBuf>,
}

impl CodecBitstream {
    fn sections(&self) -> Vec<&BitBuf> {
        let mut v = vec![&self.transform, &self.spectrum, &self.faces];
        if let Some(p) = &self.pairs {
            v.push(p);
        }
        v
    }

    /// Header plus length prefixes.
    pub fn header_bits(&self) -> usize {
        HEADER_BITS + SECTION_PREFIX_BITS * self.sections().len()
    }

    /// Unpadded bits across header, prefixes and sections.
    pub fn total_bits(&self) -> usize {
        self.header_bits() + self.sections().iter().map(|s| s.len()).sum::<usize>()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = MAGIC.to_vec();
        out.extend([self.n as u8, self.s as u8, self.mode.code()]);
        for sec in self.sections() {
            out.extend((sec.len() as u32).to_be_bytes());
            out.extend_from_slice(sec.bytes());
        }
        out
    }

    /// Parse the container. Section contents are checked by the decoder.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let bad = |m: &str| Error::MalformedStream(m.to_string());
        if bytes.len() < 7 || &bytes[..4] != MAGIC {
            return Err(bad("missing BPC1 header"));
        }
        let (n, s) = (bytes[4] as usize, bytes[5] as usize);
        let mode = Mode::from_code(bytes[6])?;
        if n == 0 || n > crate::boolfn::MAX_VARS || s > n || (n + s) % 2 != 0 {
            return Err(bad(&format!("invalid header n={n} s={s}")));
        }
        if mode == Mode::BentDual && (s != 0 || n < 2) {
            return Err(bad("bent-dual stream must have s=0 and n≥2"));
        }
        let count = if mode == Mode::BentDual { 4 } else { 3 };
        let mut pos = 7;
        let mut secs = Vec::with_capacity(count);
        for _ in 0..count {
            let prefix: [u8; 4] = bytes
                .get(pos..pos + 4)
                .ok_or_else(|| bad("truncated length prefix"))?
                .try_into()
                .unwrap();
            let len = u32::from_be_bytes(prefix) as usize;
            pos += 4;
            let nbytes = (len + 7) / 8;
            let body = bytes
                .get(pos..pos + nbytes)
                .ok_or_else(|| bad("truncated section"))?;
            secs.push(BitBuf::from_bytes(body.to_vec(), len)?);
            pos += nbytes;
        }
        if pos != bytes.len() {
            return Err(bad("trailing bytes after last section"));
        }
        let mut it = secs.into_iter();
        Ok(Self {
            n,
            s,
            mode,
            transform: it.next().unwrap(),
            spectrum: it.next().unwrap(),
            faces: it.next().unwrap(),
            pairs: it.next(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::random_invertible_matrix;

    #[test]
    fn record_roundtrip() {
        for m in 1..=8 {
            let rec = TransformRecord {
                transform: AffineTransform {
                    a: random_invertible_matrix(m, m as u64),
                    b: (1 << m) - 1,
                    c: 1,
                    d: true,
                },
                coords: (1, m),
            };
            let mut buf = BitBuf::new();
            rec.write(&mut buf);
            assert_eq!(buf.len(), TransformRecord::bit_len(m));
            let mut r = buf.reader();
            assert_eq!(TransformRecord::read(&mut r, m).unwrap(), rec);
            r.finish().unwrap();
        }
    }

    #[test]
    fn container_roundtrip_and_damage() {
        let mut spectrum = BitBuf::new();
        spectrum.write(0b10110, 5);
        let cs = CodecBitstream {
            n: 4,
            s: 0,
            mode: Mode::BentDual,
            transform: BitBuf::new(),
            spectrum,
            faces: BitBuf::new(),
            pairs: Some(BitBuf::new()),
        };
        let bytes = cs.to_bytes();
        assert_eq!(bytes.len(), 7 + 16 + 1);
        assert_eq!(CodecBitstream::from_bytes(&bytes).unwrap(), cs);
        assert_eq!(cs.total_bits(), 56 + 128 + 5);
        for cut in 0..bytes.len() {
            assert!(CodecBitstream::from_bytes(&bytes[..cut]).is_err());
        }
        let mut extra = bytes.clone();
        extra.push(0);
        assert!(CodecBitstream::from_bytes(&extra).is_err());
        let mut mode = bytes;
        mode[6] = 9;
        assert!(CodecBitstream::from_bytes(&mode).is_err());
    }
}

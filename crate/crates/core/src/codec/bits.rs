//! MSB-first bit buffers.

use crate::error::{Error, Result};
use num_bigint::BigUint;

/// Growable bit string; bit 0 is the most significant bit of byte 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BitBuf {
    bytes: Vec<u8>,
    len: usize,
}

impl BitBuf {
    pub fn new() -> Self {
        Self::default()
    }

    /// Wrap `len` bits stored in `bytes`. Padding bits past `len` must be zero.
    pub fn from_bytes(bytes: Vec<u8>, len: usize) -> Result<Self> {
        if bytes.len() != (len + 7) / 8 {
            return Err(Error::MalformedStream(format!(
                "{} bytes cannot hold exactly {len} bits",
                bytes.len()
            )));
        }
        if len % 8 != 0 {
            let last = bytes[bytes.len() - 1];
            if last & (0xFF >> (len % 8)) != 0 {
                return Err(Error::MalformedStream("nonzero padding bits".into()));
            }
        }
        Ok(Self { bytes, len })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Backing bytes, zero-padded to a byte boundary.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn push(&mut self, bit: bool) {
        if self.len % 8 == 0 {
            self.bytes.push(0);
        }
        if bit {
            let last = self.bytes.len() - 1;
            self.bytes[last] |= 0x80 >> (self.len % 8);
        }
        self.len += 1;
    }

    /// Append the low `width` bits of `value`, most significant first.
    pub fn write(&mut self, value: u64, width: usize) {
        debug_assert!(width == 64 || value >> width == 0);
        for i in (0..width).rev() {
            self.push((value >> i) & 1 == 1);
        }
    }

    /// Append `value` as a `width`-bit big-endian field.
    pub fn write_big(&mut self, value: &BigUint, width: usize) {
        debug_assert!(value.bits() as usize <= width);
        for i in (0..width as u64).rev() {
            self.push(value.bit(i));
        }
    }

    pub fn append(&mut self, other: &BitBuf) {
        for i in 0..other.len {
            self.push(other.get(i));
        }
    }

    pub fn get(&self, i: usize) -> bool {
        (self.bytes[i / 8] >> (7 - i % 8)) & 1 == 1
    }

    pub fn reader(&self) -> BitReader<'_> {
        BitReader {
            buf: self,
            pos: 0,
        }
    }
}

/// Cursor over a [`BitBuf`].
#[derive(Debug)]
pub struct BitReader<'a> {
    buf: &'a BitBuf,
    pos: usize,
}

fn truncated() -> Error {
    Error::MalformedStream("section truncated".into())
}

impl BitReader<'_> {
    pub fn remaining(&self) -> usize {
        self.buf.len - self.pos
    }

    pub fn read_bit(&mut self) -> Result<bool> {
        if self.pos >= self.buf.len {
            return Err(truncated());
        }
        let b = self.buf.get(self.pos);
        self.pos += 1;
        Ok(b)
    }

    pub fn read(&mut self, width: usize) -> Result<u64> {
        if width > 64 || self.remaining() < width {
            return Err(truncated());
        }
        let mut v = 0u64;
        for _ in 0..width {
            v = (v << 1) | self.read_bit()? as u64;
        }
        Ok(v)
    }

    pub fn read_big(&mut self, width: usize) -> Result<BigUint> {
        if self.remaining() < width {
            return Err(truncated());
        }
        let pad = (8 - width % 8) % 8;
        let mut bytes = vec![0u8; (width + pad) / 8];
        for i in 0..width {
            if self.read_bit()? {
                let at = pad + i;
                bytes[at / 8] |= 0x80 >> (at % 8);
            }
        }
        Ok(BigUint::from_bytes_be(&bytes))
    }

    /// Fail unless every bit has been consumed.
    pub fn finish(self) -> Result<()> {
        if self.remaining() != 0 {
            return Err(Error::MalformedStream(format!(
                "{} unread bits in section",
                self.remaining()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn msb_first_layout() {
        let mut b = BitBuf::new();
        b.write(0b101, 3);
        b.write(0xFF, 8);
        assert_eq!(b.len(), 11);
        assert_eq!(b.bytes(), &[0b1011_1111, 0b1110_0000]);
        let mut r = b.reader();
        assert_eq!(r.read(3).unwrap(), 5);
        assert_eq!(r.read(8).unwrap(), 255);
        assert!(r.read_bit().is_err());
        r.finish().unwrap();
    }

    #[test]
    fn big_fields() {
        let v = BigUint::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let w = v.bits() as usize + 5;
        let mut b = BitBuf::new();
        b.push(true);
        b.write_big(&v, w);
        b.write_big(&BigUint::default(), 0);
        let mut r = b.reader();
        assert!(r.read_bit().unwrap());
        assert_eq!(r.read_big(w).unwrap(), v);
        assert_eq!(r.read_big(0).unwrap(), BigUint::default());
        r.finish().unwrap();
    }

    #[test]
    fn padding_checked() {
        assert!(BitBuf::from_bytes(vec![0b1010_0000], 3).is_ok());
        assert!(BitBuf::from_bytes(vec![0b1010_0001], 3).is_err());
        assert!(BitBuf::from_bytes(vec![0, 0], 3).is_err());
    }

    #[test]
    fn unread_bits_rejected() {
        let mut b = BitBuf::new();
        b.write(3, 2);
        let mut r = b.reader();
        r.read_bit().unwrap();
        assert!(r.finish().is_err());
    }
}

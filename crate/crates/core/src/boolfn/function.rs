use crate::error::{Error, Result};
use std::fmt;

pub const MAX_VARS: usize = 24;

/// A Boolean function on F₂ⁿ stored as a bitpacked truth table.
///
/// Bit `x` of the table is `f(x)`, where `x` encodes the input vector with
/// `x₁` as the most significant bit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

fn word_count(n: usize) -> usize {
    ((1usize << n) + 63) / 64
}

fn check_vars(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::BadVariableCount(n));
    }
    Ok(())
}

impl BooleanFunction {
    /// The constant zero function on `n` variables.
    pub fn zero(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self {
            n,
            words: vec![0; word_count(n)],
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(u32) -> bool) -> Result<Self> {
        let mut out = Self::zero(n)?;
        for x in 0..1u32 << n {
            if f(x) {
                out.set(x, true);
            }
        }
        Ok(out)
    }

    /// Build from a slice of bits indexed by input vector.
    pub fn from_bits(n: usize, bits: &[bool]) -> Result<Self> {
        check_vars(n)?;
        if bits.len() != 1 << n {
            return Err(Error::BadTableLength {
                expected: 1 << n,
                got: bits.len(),
            });
        }
        Self::from_fn(n, |x| bits[x as usize])
    }

    /// Build a function on `n <= 6` variables from an integer whose bit `x` is `f(x)`.
    pub fn from_u64(n: usize, table: u64) -> Result<Self> {
        check_vars(n)?;
        if n > 6 {
            return Err(Error::BadVariableCount(n));
        }
        let len = 1u32 << n;
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        if table & !mask != 0 {
            return Err(Error::BadTableLength {
                expected: len as usize,
                got: 64 - table.leading_zeros() as usize,
            });
        }
        Ok(Self {
            n,
            words: vec![table],
        })
    }

    pub(crate) fn from_words(n: usize, mut words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_count(n));
        if n < 6 {
            words[0] &= (1u64 << (1 << n)) - 1;
        }
        Self { n, words }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of points, `2ⁿ`.
    #[inline]
    pub fn len(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn get(&self, x: u32) -> bool {
        (self.words[(x >> 6) as usize] >> (x & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, x: u32, v: bool) {
        let w = &mut self.words[(x >> 6) as usize];
        if v {
            *w |= 1 << (x & 63);
        } else {
            *w &= !(1 << (x & 63));
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The table as an integer, for `n <= 6`.
    pub fn to_u64(&self) -> Option<u64> {
        (self.n <= 6).then(|| self.words[0])
    }

    /// Hamming weight of the truth table.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.weight() * 2 == self.len()
    }

    /// `(-1)^{f(x)}` as `+1` / `-1`.
    #[inline]
    pub fn sign(&self, x: u32) -> i32 {
        1 - 2 * self.get(x) as i32
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len() as u32).map(move |x| self.get(x))
    }

    /// Pointwise sum over F₂.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(Self { n: self.n, words })
    }

    pub fn complement(&self) -> Self {
        let words = self.words.iter().map(|w| !w).collect();
        Self::from_words(self.n, words)
    }

    /// Parse the "tt" text format: `n=<k>` on the first line, then `2^k`
    /// characters from `{0,1}`.
    pub fn from_tt_str(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?
            .trim();
        let n: usize = header
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse(format!("expected `n=<k>`, got `{header}`")))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad variable count: {e}")))?;
        check_vars(n)?;
        let body = lines.next().unwrap_or("").trim_end_matches('\r');
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing content after table".into()));
        }
        if body.len() != 1 << n {
            return Err(Error::BadTableLength {
                expected: 1 << n,
                got: body.len(),
            });
        }
        let mut f = Self::zero(n)?;
        for (x, c) in body.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => f.set(x as u32, true),
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character {:?} at position {x}",
                        other as char
                    )))
                }
            }
        }
        Ok(f)
    }

    /// Render in the "tt" text format, with a trailing newline.
    pub fn to_tt_string(&self) -> String {
        let mut s = String::with_capacity(self.len() + 8);
        s.push_str(&format!("n={}\n", self.n));
        s.extend(self.iter().map(|b| if b { '1' } else { '0' }));
        s.push('\n');
        s
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, ", self.n)?;
        if self.n <= 8 {
            for b in self.iter() {
                f.write_str(if b { "1" } else { "0" })?;
            }
        } else {
            write!(f, "weight={}", self.weight())?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tt_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tt_roundtrip() {
        let f = BooleanFunction::from_fn(3, |x| x.count_ones() >= 2).unwrap();
        let text = f.to_tt_string();
        assert_eq!(text, "n=3\n00010111\n");
        assert_eq!(BooleanFunction::from_tt_str(&text).unwrap(), f);
        assert_eq!(BooleanFunction::from_tt_str("n=3\n00010111").unwrap(), f);
    }

    #[test]
    fn tt_rejects_garbage() {
        assert!(matches!(
            BooleanFunction::from_tt_str("n=2\n010"),
            Err(Error::BadTableLength { .. })
        ));
        assert!(matches!(
            BooleanFunction::from_tt_str("n=2\n01a0"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            BooleanFunction::from_tt_str("x=2\n0100"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            BooleanFunction::from_tt_str("n=0\n0"),
            Err(Error::BadVariableCount(0))
        ));
    }

    #[test]
    fn small_tables() {
        let f = BooleanFunction::from_u64(2, 0b1000).unwrap();
        assert!(f.get(3) && !f.get(0));
        assert_eq!(f.complement().to_u64(), Some(0b0111));
        assert!(BooleanFunction::from_u64(2, 0b10000).is_err());
        let g = BooleanFunction::from_u64(6, u64::MAX).unwrap();
        assert_eq!(g.weight(), 64);
    }

    #[test]
    fn large_table_bits() {
        let mut f = BooleanFunction::zero(10).unwrap();
        f.set(700, true);
        f.set(3, true);
        assert!(f.get(700) && f.get(3) && !f.get(701));
        assert_eq!(f.weight(), 2);
        f.set(700, false);
        assert_eq!(f.weight(), 1);
    }
}

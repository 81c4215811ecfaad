use super::matrix::BinaryMatrix;
use crate::boolfn::BooleanFunction;
use crate::error::{Error, Result};
use crate::vector::dot;

/// EA-equivalence datum: `g(x) = f(A x ⊕ b) ⊕ ⟨c, x⟩ ⊕ d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineTransform {
    pub a: BinaryMatrix,
    pub b: u32,
    pub c: u32,
    pub d: bool,
}

impl AffineTransform {
    pub fn identity(n: usize) -> Self {
        Self {
            a: BinaryMatrix::identity(n),
            b: 0,
            c: 0,
            d: false,
        }
    }

    pub fn linear(a: BinaryMatrix) -> Self {
        Self {
            a,
            b: 0,
            c: 0,
            d: false,
        }
    }

    pub fn translation(n: usize, b: u32) -> Self {
        Self {
            b,
            ..Self::identity(n)
        }
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n())
    }

    /// Input map `x ↦ A x ⊕ b`.
    pub fn map_input(&self, x: u32) -> u32 {
        self.a.apply(x) ^ self.b
    }

    /// Output correction `ℓ(x) = ⟨c, x⟩ ⊕ d`.
    pub fn ell(&self, x: u32) -> bool {
        dot(self.c, x) ^ self.d
    }

    /// `A x ⊕ b` for every `x`, built incrementally from the columns.
    pub(crate) fn input_images(&self) -> Vec<u32> {
        let n = self.n();
        let cols: Vec<u32> = (0..n).map(|j| self.a.column(n - 1 - j)).collect();
        let mut img = vec![0u32; 1 << n];
        img[0] = self.b;
        for x in 1..1u32 << n {
            let low = x.trailing_zeros() as usize;
            img[x as usize] = img[(x & (x - 1)) as usize] ^ cols[low];
        }
        img
    }
}

/// `g(x) = f(A x ⊕ b) ⊕ ⟨c, x⟩ ⊕ d`.
pub fn apply_affine(f: &BooleanFunction, t: &AffineTransform) -> Result<BooleanFunction> {
    if t.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            got: t.n(),
        });
    }
    if !t.a.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let img = t.input_images();
    BooleanFunction::from_fn(f.n(), |x| f.get(img[x as usize]) ^ t.ell(x))
}

/// The transform undoing `t` under [`apply_affine`].
///
/// With `y = A x ⊕ b` we have `x = A⁻¹ y ⊕ A⁻¹ b`, so
/// `f(y) = g(A⁻¹ y ⊕ A⁻¹ b) ⊕ ⟨(A⁻¹)ᵀ c, y⟩ ⊕ ⟨c, A⁻¹ b⟩ ⊕ d`.
pub fn invert_transform(t: &AffineTransform) -> Result<AffineTransform> {
    let inv = t.a.inverse()?;
    let b = inv.apply(t.b);
    let c = inv.transpose().apply(t.c);
    let d = t.d ^ dot(t.c, b);
    Ok(AffineTransform { a: inv, b, c, d })
}

//! Scalar traits the numeric routines are generic over.
//!
//! Spectra live in signed machine integers (`i32` is the default width, `i64`
//! and `i128` are used where cubes of spectrum values are formed). Bound
//! formulas evaluate in any IEEE float type.

use num_traits::{Float, FromPrimitive, PrimInt, Signed};
use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Signed integer type able to hold Walsh coefficients.
pub trait SpectrumScalar:
    PrimInt + Signed + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Largest `n` for which every intermediate of a length-`2^n` butterfly fits.
    const MAX_VARS: usize;
}

impl SpectrumScalar for i16 {
    const MAX_VARS: usize = 14;
}
impl SpectrumScalar for i32 {
    const MAX_VARS: usize = 30;
}
impl SpectrumScalar for i64 {
    const MAX_VARS: usize = 62;
}
impl SpectrumScalar for i128 {
    const MAX_VARS: usize = 126;
}

/// Real type used for bound evaluation.
pub trait BoundScalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }
}

impl BoundScalar for f32 {}
impl BoundScalar for f64 {}

//! Analysis and compact lossless storage of bent and plateaued Boolean
//! functions.
//!
//! Vectors of F₂ⁿ are packed into integers with `x₁` as the most significant
//! of the `n` low bits; truth tables, spectra and ANF coefficient tables are
//! all indexed this way.

pub mod affine;
pub mod boolfn;
pub mod bounds;
pub mod codec;
pub mod error;
pub mod scalar;
pub mod search;
pub mod stats;
pub mod vector;

/// Exact rational used for fractions of faces and flats.
pub type Rational = num_rational::Ratio<i64>;

/// Walsh spectrum at the default 32-bit width.
pub type Spectrum = boolfn::WalshSpectrum<i32>;

/// Bound report evaluated in `f64`.
pub type Report = bounds::BoundReport<f64>;

pub use affine::{apply_affine, invert_transform, normalize_ea, AffineTransform, BinaryMatrix};
pub use boolfn::{
    algebraic_degree, classify_plateau, dual_bent, walsh_transform, AnfPolynomial,
    BooleanFunction, PlateauClass, WalshSpectrum,
};
pub use codec::{
    bitstream_length_report, decode, decode_bytes, encode_bent_dual, encode_plateaued,
    CodecBitstream,
};
pub use error::{Error, Result};
pub use search::{enumerate_plateaued, maiorana_mcfarland, Corpus};

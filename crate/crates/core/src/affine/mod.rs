//! Invertible maps over F₂, affine transforms of functions, and the
//! face-parity normalization search.

mod matrix;
mod normalize;
mod transform;

pub(crate) use matrix::random_invertible_with;
pub use matrix::{random_invertible_matrix, BinaryMatrix};
pub use normalize::{
    constant_condition_holds, normalize_ea, normalize_ea_with, odd_condition_holds,
    odd_fraction_limit, NormalizationCertificate, ATTEMPT_BUDGET,
};
pub use transform::{apply_affine, invert_transform, AffineTransform};

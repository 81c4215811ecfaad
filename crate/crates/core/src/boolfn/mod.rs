//! Truth tables and the transforms on them.

mod anf;
mod classify;
mod function;
mod subspace;
mod walsh;

pub use anf::{algebraic_degree, mobius_transform, AnfPolynomial};
pub use classify::{
    classify_plateau, classify_spectrum, derivative, dual_bent, restrict_to_hyperplane, unit,
    PlateauClass,
};
pub use function::{BooleanFunction, MAX_VARS};
pub(crate) use subspace::sums_from_restricted;
pub use subspace::{coset_signed_sums, coset_sums_from_spectrum, CosetSums, SubspacePair};
pub use walsh::{fwht_in_place, inverse_walsh, walsh_transform, walsh_transform_in, WalshSpectrum};

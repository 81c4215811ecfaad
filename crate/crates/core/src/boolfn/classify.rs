use super::function::BooleanFunction;
use super::walsh::{walsh_transform, WalshSpectrum};
use crate::error::{Error, Result};
use crate::vector::coord_mask;
use std::fmt;

/// Spectral class of a Boolean function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlateauClass {
    /// Every `W(y)` lies in `{0, ±2^{(n+s)/2}}`; `s = 0` is bent.
    Plateaued(u32),
    NotPlateaued,
}

impl PlateauClass {
    pub fn is_bent(self) -> bool {
        self == PlateauClass::Plateaued(0)
    }

    pub fn order(self) -> Option<u32> {
        match self {
            PlateauClass::Plateaued(s) => Some(s),
            PlateauClass::NotPlateaued => None,
        }
    }
}

impl fmt::Display for PlateauClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlateauClass::Plateaued(0) => f.write_str("bent (s=0)"),
            PlateauClass::Plateaued(1) => f.write_str("near-bent (s=1)"),
            PlateauClass::Plateaued(s) => write!(f, "{s}-plateaued (s={s})"),
            PlateauClass::NotPlateaued => f.write_str("not plateaued"),
        }
    }
}

/// Classify from a precomputed spectrum.
pub fn classify_spectrum(w: &WalshSpectrum<i32>) -> PlateauClass {
    let n = w.n() as u32;
    let peak = w.max_abs();
    if peak <= 0 || !(peak as u32).is_power_of_two() {
        return PlateauClass::NotPlateaued;
    }
    let e = peak.trailing_zeros();
    // peak = 2^{(n+s)/2}
    if 2 * e < n {
        return PlateauClass::NotPlateaued;
    }
    let s = 2 * e - n;
    if s > n {
        return PlateauClass::NotPlateaued;
    }
    if w.values().iter().any(|&v| v != 0 && v.abs() != peak) {
        return PlateauClass::NotPlateaued;
    }
    // the nonzero part must be exactly 1/2^s of the spectrum
    if w.support_size() != 1usize << (n - s) {
        return PlateauClass::NotPlateaued;
    }
    PlateauClass::Plateaued(s)
}

pub fn classify_plateau(f: &BooleanFunction) -> PlateauClass {
    classify_spectrum(&walsh_transform(f))
}

/// The dual bent function `g` with `W_f = 2^{n/2} (-1)^g`.
pub fn dual_bent(f: &BooleanFunction) -> Result<BooleanFunction> {
    let w = walsh_transform(f);
    if !classify_spectrum(&w).is_bent() {
        return Err(Error::NotBent);
    }
    BooleanFunction::from_fn(f.n(), |y| w.get(y) < 0)
}

/// Restrict to the hyperplane `x_i = 0` as an `(n-1)`-variable function, the
/// remaining coordinates keeping their order.
pub fn restrict_to_hyperplane(f: &BooleanFunction, i: usize) -> Result<BooleanFunction> {
    let n = f.n();
    if n < 2 || i == 0 || i > n {
        return Err(Error::BadCoordinate { coord: i, n });
    }
    let low_bits = n - i;
    let low = (1u32 << low_bits) - 1;
    BooleanFunction::from_fn(n - 1, |x| {
        let full = ((x & !low) << 1) | (x & low);
        f.get(full)
    })
}

/// `D_a f(x) = f(x) ⊕ f(x ⊕ a)`.
pub fn derivative(f: &BooleanFunction, a: u32) -> Result<BooleanFunction> {
    if a == 0 {
        return Err(Error::ZeroDirection);
    }
    if a >> f.n() != 0 {
        return Err(Error::OutOfRange(format!(
            "direction {a} is not a vector of F_2^{}",
            f.n()
        )));
    }
    BooleanFunction::from_fn(f.n(), |x| f.get(x) ^ f.get(x ^ a))
}

/// Unit vector `e_i`.
pub fn unit(n: usize, i: usize) -> u32 {
    coord_mask(n, i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_anf(n: usize, f: impl Fn(&[u32]) -> u32) -> BooleanFunction {
        BooleanFunction::from_fn(n, |x| {
            let v: Vec<u32> = (1..=n).map(|i| (x >> (n - i)) & 1).collect();
            f(&v) & 1 == 1
        })
        .unwrap()
    }

    #[test]
    fn classify_examples() {
        let x1x2 = from_anf(2, |v| v[0] & v[1]);
        assert_eq!(classify_plateau(&x1x2), PlateauClass::Plateaued(0));
        let near = from_anf(3, |v| (v[0] & v[1]) ^ v[2]);
        assert_eq!(classify_plateau(&near), PlateauClass::Plateaued(1));
        let x2x3 = from_anf(3, |v| v[1] & v[2]);
        assert_eq!(classify_plateau(&x2x3), PlateauClass::Plateaued(1));
        // majority is quadratic, hence 1-plateaued
        let maj = from_anf(3, |v| (v[0] & v[1]) ^ (v[0] & v[2]) ^ (v[1] & v[2]));
        assert_eq!(classify_plateau(&maj), PlateauClass::Plateaued(1));
        // spectrum {6, ±2}
        let and3 = from_anf(3, |v| v[0] & v[1] & v[2]);
        assert_eq!(walsh_transform(&and3).values(), &[6, 2, 2, -2, 2, -2, -2, 2]);
        assert_eq!(classify_plateau(&and3), PlateauClass::NotPlateaued);
        let affine = from_anf(3, |v| v[0] ^ v[2] ^ 1);
        assert_eq!(classify_plateau(&affine), PlateauClass::Plateaued(3));
    }

    #[test]
    fn dual_examples() {
        let x1x2 = from_anf(2, |v| v[0] & v[1]);
        assert_eq!(dual_bent(&x1x2).unwrap(), x1x2);
        let maj = from_anf(3, |v| (v[0] & v[1]) ^ (v[0] & v[2]) ^ (v[1] & v[2]));
        assert_eq!(dual_bent(&maj), Err(Error::NotBent));
    }

    #[test]
    fn restriction_examples() {
        let f = from_anf(4, |v| (v[0] & v[1]) ^ (v[2] & v[3]));
        let h = restrict_to_hyperplane(&f, 1).unwrap();
        // h(x2, x3, x4) = x3 x4
        assert_eq!(h, from_anf(3, |v| v[1] & v[2]));
        assert_eq!(classify_plateau(&h), PlateauClass::Plateaued(1));
        let zero = BooleanFunction::zero(4).unwrap();
        assert_eq!(
            restrict_to_hyperplane(&zero, 3).unwrap(),
            BooleanFunction::zero(3).unwrap()
        );
        assert!(matches!(
            restrict_to_hyperplane(&f, 5),
            Err(Error::BadCoordinate { coord: 5, n: 4 })
        ));
        assert!(restrict_to_hyperplane(&f, 0).is_err());
    }

    #[test]
    fn restriction_keeps_order() {
        // f = x3 on 4 vars, restrict x2 = 0 gives x2 in the new numbering
        let f = from_anf(4, |v| v[2]);
        let h = restrict_to_hyperplane(&f, 2).unwrap();
        assert_eq!(h, from_anf(3, |v| v[1]));
    }

    #[test]
    fn derivative_examples() {
        let x1x2 = from_anf(2, |v| v[0] & v[1]);
        let d = derivative(&x1x2, unit(2, 1)).unwrap();
        assert_eq!(d, from_anf(2, |v| v[1]));
        assert!(d.is_balanced());
        let zero = BooleanFunction::zero(3).unwrap();
        let dz = derivative(&zero, 5).unwrap();
        assert_eq!(dz, zero);
        assert!(!dz.is_balanced());
        assert_eq!(derivative(&zero, 0), Err(Error::ZeroDirection));
    }
}

use super::function::BooleanFunction;
use crate::error::{Error, Result};
use crate::scalar::SpectrumScalar;
use serde::{Deserialize, Serialize};

/// Walsh–Hadamard spectrum `W(y) = Σ_x (-1)^{f(x) ⊕ ⟨x,y⟩}`, indexed like the
/// truth table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalshSpectrum<T = i32> {
    n: usize,
    values: Vec<T>,
}

/// In-place unnormalized Walsh–Hadamard butterfly. `data.len()` must be a
/// power of two.
pub fn fwht_in_place<T: SpectrumScalar>(data: &mut [T]) {
    let len = data.len();
    debug_assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in data.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*a, *b);
                *a = u + v;
                *b = u - v;
            }
        }
        h *= 2;
    }
}

/// Walsh–Hadamard transform with 32-bit coefficients.
pub fn walsh_transform(f: &BooleanFunction) -> WalshSpectrum<i32> {
    walsh_transform_in(f).expect("i32 holds spectra for n <= 24")
}

/// Walsh–Hadamard transform into an arbitrary signed scalar.
pub fn walsh_transform_in<T: SpectrumScalar>(f: &BooleanFunction) -> Result<WalshSpectrum<T>> {
    let n = f.n();
    if n > T::MAX_VARS {
        return Err(Error::Overflow(n));
    }
    let one = T::one();
    let mut values: Vec<T> = f.iter().map(|b| if b { -one } else { one }).collect();
    fwht_in_place(&mut values);
    Ok(WalshSpectrum { n, values })
}

/// Recover the function from its spectrum. Fails with `NotBooleanSpectrum`
/// unless the inverse butterfly yields `±2ⁿ` everywhere.
pub fn inverse_walsh<T: SpectrumScalar>(w: &WalshSpectrum<T>) -> Result<BooleanFunction> {
    let n = w.n;
    let mut vals = w.values.clone();
    fwht_in_place(&mut vals);
    let full = T::one() << n;
    let mut f = BooleanFunction::zero(n)?;
    for (x, v) in vals.into_iter().enumerate() {
        if v == -full {
            f.set(x as u32, true);
        } else if v != full {
            return Err(Error::NotBooleanSpectrum);
        }
    }
    Ok(f)
}

impl<T: SpectrumScalar> WalshSpectrum<T> {
    /// Wrap raw values. The length must be `2ⁿ`; no other check is made.
    pub fn from_values(n: usize, values: Vec<T>) -> Result<Self> {
        if values.len() != 1 << n {
            return Err(Error::BadTableLength {
                expected: 1 << n,
                got: values.len(),
            });
        }
        Ok(Self { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    #[inline]
    pub fn get(&self, y: u32) -> T {
        self.values[y as usize]
    }

    pub fn max_abs(&self) -> T {
        self.values
            .iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(T::zero)
    }

    /// Number of nonzero coefficients.
    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|v| !v.is_zero()).count()
    }

    /// `Σ_y W(y)² == 2^{2n}`, computed in `i128`.
    pub fn satisfies_parseval(&self) -> bool {
        let total: i128 = self
            .values
            .iter()
            .map(|v| {
                let v = v.to_i128().expect("spectrum value fits i128");
                v * v
            })
            .sum();
        total == 1i128 << (2 * self.n)
    }

    /// JSON report `{"n":k,"values":[...]}`.
    pub fn to_json(&self) -> String {
        let values: Vec<i128> = self.values.iter().map(|v| v.to_i128().unwrap()).collect();
        serde_json::json!({ "n": self.n, "values": values }).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Direct O(4ⁿ) double sum.
    fn naive(f: &BooleanFunction) -> Vec<i32> {
        (0..f.len() as u32)
            .map(|y| {
                (0..f.len() as u32)
                    .map(|x| {
                        let e = f.get(x) ^ crate::vector::dot(x, y);
                        if e {
                            -1
                        } else {
                            1
                        }
                    })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn constant_and_linear() {
        let zero = BooleanFunction::zero(2).unwrap();
        assert_eq!(walsh_transform(&zero).values(), &[4, 0, 0, 0]);
        let x1 = BooleanFunction::from_fn(1, |x| x == 1).unwrap();
        assert_eq!(walsh_transform(&x1).values(), &[0, 2]);
    }

    #[test]
    fn product_matches_oracle() {
        let f = BooleanFunction::from_u64(2, 0b1000).unwrap();
        assert_eq!(naive(&f), vec![2, 2, 2, -2]);
        assert_eq!(walsh_transform(&f).values(), &[2, 2, 2, -2]);
    }

    #[test]
    fn inverse_cases() {
        let w = WalshSpectrum::from_values(2, vec![4, 0, 0, 0]).unwrap();
        assert_eq!(inverse_walsh(&w).unwrap(), BooleanFunction::zero(2).unwrap());
        let w = WalshSpectrum::from_values(2, vec![2, 2, 2, -2]).unwrap();
        assert_eq!(inverse_walsh(&w).unwrap().to_u64(), Some(0b1000));
        let w = WalshSpectrum::from_values(2, vec![2, 2, 2, 2]).unwrap();
        assert_eq!(inverse_walsh(&w), Err(Error::NotBooleanSpectrum));
    }

    #[test]
    fn exhaustive_small_agrees_with_oracle() {
        for n in 1..=3 {
            for t in 0..1u64 << (1 << n) {
                let f = BooleanFunction::from_u64(n, t).unwrap();
                assert_eq!(walsh_transform(&f).values(), naive(&f).as_slice());
            }
        }
    }

    #[test]
    fn wide_scalars_agree() {
        let f = BooleanFunction::from_fn(7, |x| (x * 37 + 11) % 5 < 2).unwrap();
        let a = walsh_transform(&f);
        let b: WalshSpectrum<i128> = walsh_transform_in(&f).unwrap();
        assert!(a
            .values()
            .iter()
            .zip(b.values())
            .all(|(&p, &q)| p as i128 == q));
        let narrow = BooleanFunction::zero(15).unwrap();
        assert_eq!(
            walsh_transform_in::<i16>(&narrow).unwrap_err(),
            Error::Overflow(15)
        );
    }

    #[test]
    fn json_report() {
        let f = BooleanFunction::from_u64(2, 0b1000).unwrap();
        assert_eq!(
            walsh_transform(&f).to_json(),
            r#"{"n":2,"values":[2,2,2,-2]}"#
        );
    }
}

//! Test corpora: exhaustive sweeps at small `n`, Maiorana–McFarland bent
//! functions, and the triple-convolution plateau test.

use crate::affine::{apply_affine, random_invertible_with, AffineTransform};
use crate::boolfn::{
    classify_plateau, fwht_in_place, restrict_to_hyperplane, walsh_transform, BooleanFunction,
    PlateauClass,
};
use crate::error::{Error, Result};
use crate::vector::dot;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt::Write as _;

/// Largest `n` for which [`enumerate_plateaued`] sweeps all `2^{2ⁿ}` tables.
pub const MAX_SWEEP_VARS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Exhaustive,
    Constructed {
        name: String,
        parameters: String,
        seed: u64,
    },
    /// Read from a corpus file.
    Loaded,
}

/// A list of functions that all classify as `Plateaued(s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub n: usize,
    pub s: usize,
    pub functions: Vec<BooleanFunction>,
    pub provenance: Provenance,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    /// Header line `corpus n=<n> s=<s> count=<k>` followed by one tt record
    /// per function.
    pub fn to_text(&self) -> String {
        let mut out = format!("corpus n={} s={} count={}\n", self.n, self.s, self.len());
        for f in &self.functions {
            write!(out, "{}", f.to_tt_string()).unwrap();
        }
        out
    }

    /// Parse [`Corpus::to_text`] output, checking the count, each record's
    /// variable count and each function's class.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty corpus file".into()))?;
        let field = |key: &str| -> Result<usize> {
            header
                .split_whitespace()
                .find_map(|t| t.strip_prefix(key))
                .ok_or_else(|| Error::Parse(format!("corpus header lacks {key}")))?
                .parse()
                .map_err(|_| Error::Parse(format!("bad {key} in corpus header")))
        };
        if !header.starts_with("corpus ") {
            return Err(Error::Parse("corpus header must start with 'corpus'".into()));
        }
        let (n, s, count) = (field("n=")?, field("s=")?, field("count=")?);
        let rest: Vec<&str> = lines.collect();
        if rest.len() != 2 * count {
            return Err(Error::Parse(format!(
                "header promises {count} records, found {} lines",
                rest.len()
            )));
        }
        let functions = rest
            .chunks(2)
            .map(|rec| {
                let f = BooleanFunction::from_tt_str(&format!("{}\n{}\n", rec[0], rec[1]))?;
                if f.n() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: f.n(),
                    });
                }
                if classify_plateau(&f) != PlateauClass::Plateaued(s as u32) {
                    return Err(Error::WrongPlateauOrder { expected: s as u32 });
                }
                Ok(f)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n,
            s,
            functions,
            provenance: Provenance::Loaded,
        })
    }
}

/// All `s`-plateaued functions on `n ≤ 4` variables in truth-table order
/// (bit `x` of the integer is `f(x)`).
pub fn enumerate_plateaued(n: usize, s: usize) -> Result<Corpus> {
    if n == 0 {
        return Err(Error::BadVariableCount(n));
    }
    if n > MAX_SWEEP_VARS {
        return Err(Error::TooLarge(n));
    }
    if s > n || (n + s) % 2 != 0 {
        return Err(Error::ParityMismatch { n, s });
    }
    let total = 1u64 << (1 << n);
    let chunk = (total / 64).max(1);
    let target = PlateauClass::Plateaued(s as u32);
    let functions = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            (c * chunk..((c + 1) * chunk).min(total))
                .map(|t| BooleanFunction::from_u64(n, t).unwrap())
                .filter(|f| classify_plateau(f) == target)
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .concat();
    Ok(Corpus {
        n,
        s,
        functions,
        provenance: Provenance::Exhaustive,
    })
}

/// `f(x, y) = ⟨x, π(y)⟩ ⊕ h(y)` on `2m` variables, `x` the first `m`
/// coordinates. `perm[y]` is `π(y)`.
pub fn maiorana_mcfarland(m: usize, h: &BooleanFunction, perm: &[u32]) -> Result<BooleanFunction> {
    if h.n() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: h.n(),
        });
    }
    let size = 1usize << m;
    if perm.len() != size {
        return Err(Error::BadTableLength {
            expected: size,
            got: perm.len(),
        });
    }
    let mut seen = vec![false; size];
    for &p in perm {
        if p as usize >= size || std::mem::replace(&mut seen[p as usize], true) {
            return Err(Error::NotBijective);
        }
    }
    let low = (size - 1) as u32;
    BooleanFunction::from_fn(2 * m, |z| {
        let (x, y) = (z >> m, z & low);
        dot(x, perm[y as usize]) ^ h.get(y)
    })
}

/// Maiorana–McFarland function with `π` and `h` drawn from a seeded RNG.
pub fn random_maiorana_mcfarland(m: usize, seed: u64) -> Result<BooleanFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_mm_with(m, &mut rng)
}

fn random_mm_with(m: usize, rng: &mut ChaCha8Rng) -> Result<BooleanFunction> {
    let mut perm: Vec<u32> = (0..1u32 << m).collect();
    perm.shuffle(rng);
    let h = BooleanFunction::from_fn(m, |_| rng.gen())?;
    maiorana_mcfarland(m, &h, &perm)
}

/// `count` bent functions on `2m` variables: random Maiorana–McFarland
/// functions moved by random affine transforms.
pub fn constructed_bent_corpus(m: usize, count: usize, seed: u64) -> Result<Corpus> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * m;
    let functions = (0..count)
        .map(|_| {
            let f = random_mm_with(m, &mut rng)?;
            let t = AffineTransform {
                a: random_invertible_with(n, &mut rng),
                b: rng.gen_range(0..1u32 << n),
                c: rng.gen_range(0..1u32 << n),
                d: rng.gen(),
            };
            apply_affine(&f, &t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Corpus {
        n,
        s: 0,
        functions,
        provenance: Provenance::Constructed {
            name: "maiorana-mcfarland+affine".into(),
            parameters: format!("m={m} count={count}"),
            seed,
        },
    })
}

/// Restrictions of each bent function in `bent` to the hyperplane `x_i = 0`,
/// `i` cycling through the coordinates. The results are near-bent.
pub fn hyperplane_restrictions(bent: &Corpus) -> Result<Corpus> {
    let n = bent.n;
    if n < 2 {
        return Err(Error::BadVariableCount(n));
    }
    let functions = bent
        .functions
        .iter()
        .enumerate()
        .map(|(k, f)| restrict_to_hyperplane(f, k % n + 1))
        .collect::<Result<Vec<_>>>()?;
    Ok(Corpus {
        n: n - 1,
        s: 1,
        functions,
        provenance: Provenance::Constructed {
            name: "hyperplane-restriction".into(),
            parameters: format!("n={n}"),
            seed: match bent.provenance {
                Provenance::Constructed { seed, .. } => seed,
                _ => 0,
            },
        },
    })
}

/// Whether `(-1)^f * (-1)^f * (-1)^f = 2^{n+s} (-1)^f`, with `*` the
/// convolution over F₂ⁿ. Evaluated by cubing the spectrum pointwise and
/// transforming back.
pub fn triple_convolution_check(f: &BooleanFunction, s: usize) -> bool {
    let n = f.n();
    if s > n || (n + s) % 2 != 0 {
        return false;
    }
    let mut cube: Vec<i128> = walsh_transform(f)
        .values()
        .iter()
        .map(|&w| (w as i128).pow(3))
        .collect();
    fwht_in_place(&mut cube);
    // transform of W³ is 2ⁿ times the triple convolution
    let target = 1i128 << (2 * n + s);
    cube.iter()
        .enumerate()
        .all(|(x, &v)| v == target * f.sign(x as u32) as i128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_plateaued(2, 0).unwrap().len(), 8);
        assert_eq!(enumerate_plateaued(2, 2).unwrap().len(), 8);
        assert_eq!(enumerate_plateaued(1, 1).unwrap().len(), 4);
        let c = enumerate_plateaued(3, 1).unwrap();
        assert!(c.functions.windows(2).all(|w| w[0].to_u64() < w[1].to_u64()));
        assert!(matches!(enumerate_plateaued(5, 1), Err(Error::TooLarge(5))));
        assert!(matches!(enumerate_plateaued(4, 1), Err(Error::ParityMismatch { .. })));
    }

    #[test]
    fn smallest_maiorana_mcfarland() {
        let h = BooleanFunction::zero(1).unwrap();
        let f = maiorana_mcfarland(1, &h, &[0, 1]).unwrap();
        assert_eq!(f, BooleanFunction::from_u64(2, 0b1000).unwrap());
        let h2 = BooleanFunction::zero(2).unwrap();
        let g = maiorana_mcfarland(2, &h2, &[0, 1, 2, 3]).unwrap();
        assert!(classify_plateau(&g).is_bent());
        assert_eq!(maiorana_mcfarland(2, &h2, &[0, 1, 1, 3]), Err(Error::NotBijective));
    }

    #[test]
    fn triple_convolution_agrees_on_three_variables() {
        for t in 0..256u64 {
            let f = BooleanFunction::from_u64(3, t).unwrap();
            let class = classify_plateau(&f);
            for s in [1, 3] {
                assert_eq!(
                    triple_convolution_check(&f, s),
                    class == PlateauClass::Plateaued(s as u32),
                    "t={t:#x} s={s}"
                );
            }
        }
    }

    #[test]
    fn constructed_corpora_classify() {
        let bent = constructed_bent_corpus(3, 10, 5).unwrap();
        assert!(bent.functions.iter().all(|f| classify_plateau(f).is_bent()));
        let near = hyperplane_restrictions(&bent).unwrap();
        assert_eq!(near.n, 5);
        assert!(near
            .functions
            .iter()
            .all(|f| classify_plateau(f) == PlateauClass::Plateaued(1)));
        assert_eq!(constructed_bent_corpus(3, 10, 5).unwrap(), bent);
    }

    #[test]
    fn corpus_text_roundtrip() {
        let c = enumerate_plateaued(2, 0).unwrap();
        let text = c.to_text();
        assert!(text.starts_with("corpus n=2 s=0 count=8\n"));
        let back = Corpus::from_text(&text).unwrap();
        assert_eq!(back.functions, c.functions);
        assert!(Corpus::from_text("corpus n=2 s=0 count=2\nn=2\n1000\n").is_err());
        assert!(Corpus::from_text("corpus n=2 s=2 count=1\nn=2\n1000\n").is_err());
    }
}

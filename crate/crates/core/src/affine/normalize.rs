use super::matrix::random_invertible_with;
use super::transform::{apply_affine, AffineTransform};
use crate::boolfn::{classify_plateau, BooleanFunction, PlateauClass};
use crate::error::{Error, Result};
use crate::stats::{face_histogram, Face, FaceHistogram, FaceRegion};
use crate::Rational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Matrices tried before giving up.
pub const ATTEMPT_BUDGET: usize = 4096;

/// Evidence that a normalized function meets both face-parity conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationCertificate {
    pub transform: AffineTransform,
    pub face: Face,
    pub ball_radius: usize,
    /// Zero-count histogram over translates whose outside coordinates lie in
    /// the ball of radius `ball_radius`.
    pub stats: FaceHistogram,
    /// Fraction of all translates with an odd number of zeros.
    pub odd_fraction: Rational,
    /// Matrices examined, counting the identity.
    pub attempts: usize,
}

/// Upper limit on the odd-face fraction and whether it is strict.
///
/// `s ≥ 2`: `< 1/2`; `s = 1`: `< 1/2 + 1/2ⁿ`; `s = 0`: `≤ 1/2 + 1/(2(2^{n-1}-1))`,
/// the mean over all parallel classes of 2-flats.
pub fn odd_fraction_limit(n: usize, s: usize) -> (Rational, bool) {
    let half = Rational::new(1, 2);
    match s {
        0 => (half + Rational::new(1, 2 * ((1i64 << (n - 1)) - 1)), false),
        1 => (half + Rational::new(1, 1i64 << n), true),
        _ => (half, true),
    }
}

/// Condition (a): the odd-face fraction over all translates is below the limit.
pub fn odd_condition_holds(n: usize, s: usize, odd_fraction: Rational) -> bool {
    let (limit, strict) = odd_fraction_limit(n, s);
    if strict {
        odd_fraction < limit
    } else {
        odd_fraction <= limit
    }
}

/// Condition (b): at least a quarter of the even faces in the region are
/// constant. Vacuous when the region holds no even face.
pub fn constant_condition_holds(h: &FaceHistogram) -> bool {
    4 * h.constant() >= h.even()
}

impl NormalizationCertificate {
    /// Re-check both conditions against `g`.
    pub fn verify(&self, g: &BooleanFunction, s: usize) -> Result<bool> {
        let all = face_histogram(g, self.face, FaceRegion::All)?;
        let ball = face_histogram(g, self.face, FaceRegion::Ball(self.ball_radius))?;
        let frac = all.odd_fraction().ok_or(Error::EmptyRegion)?;
        Ok(frac == self.odd_fraction
            && ball == self.stats
            && odd_condition_holds(g.n(), s, frac)
            && constant_condition_holds(&ball))
    }
}

/// Find `g = (f ∘ A) ⊕ ℓ` meeting both face-parity conditions for `face`.
///
/// See [`normalize_ea_with`]; among admissible `ℓ` this picks the one with the
/// fewest balanced (two-zero) faces in the ball region.
pub fn normalize_ea(
    f: &BooleanFunction,
    s: usize,
    face: Face,
    r: usize,
    seed: u64,
) -> Result<(BooleanFunction, NormalizationCertificate)> {
    normalize_ea_with(f, s, face, r, seed, |_, h| h.balanced())
}

/// Normalization with a caller-supplied cost for choosing `ℓ`.
///
/// Matrices are tried in seeded order, the identity first, until the odd-face
/// fraction meets condition (a); that fraction is invariant under adding an
/// affine function. An affine `ℓ` only changes which even faces are constant:
/// a face becomes constant exactly when the linear part of `g` on it equals
/// `ℓ`'s face coefficients. So the four choices of those two coefficients are
/// scored and the cheapest one satisfying condition (b) wins; one always
/// exists because the most frequent linear part covers at least a quarter of
/// the even faces.
pub fn normalize_ea_with<C>(
    f: &BooleanFunction,
    s: usize,
    face: Face,
    r: usize,
    seed: u64,
    mut cost: C,
) -> Result<(BooleanFunction, NormalizationCertificate)>
where
    C: FnMut(&BooleanFunction, &FaceHistogram) -> u64,
{
    let n = f.n();
    if face.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: face.n(),
        });
    }
    match classify_plateau(f) {
        PlateauClass::Plateaued(t) if t as usize == s => {}
        PlateauClass::Plateaued(_) => return Err(Error::WrongPlateauOrder { expected: s as u32 }),
        PlateauClass::NotPlateaued => return Err(Error::NotPlateaued),
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = None;
    for attempt in 0..ATTEMPT_BUDGET {
        let t = if attempt == 0 {
            AffineTransform::identity(n)
        } else {
            AffineTransform::linear(random_invertible_with(n, &mut rng))
        };
        let g = apply_affine(f, &t)?;
        let all = face_histogram(&g, face, FaceRegion::All)?;
        let frac = all.odd_fraction().ok_or(Error::EmptyRegion)?;
        if odd_condition_holds(n, s, frac) {
            found = Some((t, g, frac, attempt + 1));
            break;
        }
    }
    let (base, g0, odd_fraction, attempts) = found.ok_or(Error::SearchExhausted {
        attempts: ATTEMPT_BUDGET,
    })?;

    let (mi, mj) = (face.mask_i(), face.mask_j());
    let mut best: Option<(u64, AffineTransform, BooleanFunction, FaceHistogram)> = None;
    for sel in 0..4u32 {
        let c = if sel & 2 != 0 { mi } else { 0 } | if sel & 1 != 0 { mj } else { 0 };
        let t = AffineTransform { c, ..base.clone() };
        let g = if c == 0 {
            g0.clone()
        } else {
            BooleanFunction::from_fn(n, |x| g0.get(x) ^ ((x & c).count_ones() & 1 == 1))?
        };
        let h = face_histogram(&g, face, FaceRegion::Ball(r))?;
        if !constant_condition_holds(&h) {
            continue;
        }
        let score = cost(&g, &h);
        if best.as_ref().map_or(true, |b| score < b.0) {
            best = Some((score, t, g, h));
        }
    }
    let (_, transform, g, stats) = best.expect("some linear part covers a quarter of even faces");
    Ok((
        g,
        NormalizationCertificate {
            transform,
            face,
            ball_radius: r,
            stats,
            odd_fraction,
            attempts,
        },
    ))
}

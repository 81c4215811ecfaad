use crate::boolfn::{mobius_transform, AnfPolynomial, BooleanFunction};
use crate::error::{Error, Result};
use crate::vector::ball_points;

/// Values of a function on the Hamming ball `B_{n,r}`, one bit per point in
/// weight-then-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallValues {
    n: usize,
    r: usize,
    values: Vec<bool>,
}

impl BallValues {
    pub fn new(n: usize, r: usize, values: Vec<bool>) -> Result<Self> {
        if r > n {
            return Err(Error::BadRadius { n, r });
        }
        let expected = ball_points(n, r).len();
        if values.len() != expected {
            return Err(Error::BadTableLength {
                expected,
                got: values.len(),
            });
        }
        Ok(Self { n, r, values })
    }

    pub fn from_function(f: &BooleanFunction, r: usize) -> Result<Self> {
        let n = f.n();
        if r > n {
            return Err(Error::BadRadius { n, r });
        }
        let values = ball_points(n, r).into_iter().map(|x| f.get(x)).collect();
        Ok(Self { n, r, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn radius(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// `(point, value)` pairs in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, bool)> + '_ {
        ball_points(self.n, self.r).into_iter().zip(self.values.iter().copied())
    }
}

/// Rebuild a function of degree at most `r` from its values on `B_{n,r}`.
///
/// Every coefficient `M[f](y)` with `wt(y) ≤ r` is a sum over subsets of `y`,
/// all of which lie in the ball, so the Möbius transform of the ball values
/// (zero elsewhere) is correct up to weight `r`. Higher coefficients are
/// dropped and the polynomial evaluated everywhere.
pub fn reconstruct_from_ball(bv: &BallValues) -> Result<BooleanFunction> {
    let mut table = BooleanFunction::zero(bv.n)?;
    for (x, v) in bv.iter() {
        if v {
            table.set(x, true);
        }
    }
    let anf = AnfPolynomial::from_coeffs(mobius_transform(&table)).truncate(bv.r);
    Ok(anf.to_function())
}

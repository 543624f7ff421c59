//! Scalar rings.
//!
//! Everything in the engine is generic over [`Ring`], a context object that
//! owns the arithmetic of its elements. Rings carry runtime parameters (matrix
//! dimension, truncation order) so elements stay plain data.

mod block;
mod matrix;
mod qseries;
mod rational;
mod truncated;

pub use block::BlockRing;
pub use matrix::{MatRing, QMat};
pub use qseries::{QFrac, QPoly, QSeriesRing};
pub use rational::QRing;
pub use truncated::TruncRing;

use std::fmt;

use num_rational::BigRational;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrix::NcMatrix;

/// A unital, possibly noncommutative ring with partial inversion.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Two-sided inverse, or `None` when `a` is not a unit.
    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Central embedding of a rational constant.
    fn from_rational(&self, q: &BigRational) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(n.into()))
    }

    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Left-to-right product of the factors.
    fn product<'a, I>(&self, factors: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        factors.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    fn sum<'a, I>(&self, terms: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        terms.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Whether [`Ring::invert_matrix`] reduces to exact elimination over the
    /// rationals instead of the quasideterminant recursion.
    fn supports_flattening(&self) -> bool {
        false
    }

    /// Inverse of a square matrix over this ring. The result is labeled with
    /// the column labels of `m` as rows and its row labels as columns.
    ///
    /// The default uses `b_ij = |m|_ji^{-1}`, computed with the memoized
    /// recursive definition.
    fn invert_matrix(&self, m: &NcMatrix<Self::Elem>) -> Option<NcMatrix<Self::Elem>> {
        crate::quasidet::inverse_by_quasideterminants(self, m).ok()
    }
}

/// Entry magnitude bounds for random sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleProfile {
    pub max_numerator: i64,
    pub max_denominator: i64,
}

impl Default for SampleProfile {
    fn default() -> Self {
        SampleProfile { max_numerator: 10, max_denominator: 10 }
    }
}

impl SampleProfile {
    /// Numerator uniform in `[-N, N]`, denominator uniform in `[-D, D] \ {0}`.
    pub fn sample_rational<G: Rng + ?Sized>(&self, rng: &mut G) -> BigRational {
        let n = rng.gen_range(-self.max_numerator..=self.max_numerator);
        let mut d = rng.gen_range(1..=2 * self.max_denominator) - self.max_denominator;
        if d <= 0 {
            d -= 1;
        }
        BigRational::new(n.into(), d.into())
    }
}

pub trait SampleRing: Ring {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, profile: &SampleProfile) -> Self::Elem;
}

/// Canonical JSON serialization of ring elements.
pub trait Codec: Ring {
    fn encode(&self, a: &Self::Elem) -> serde_json::Value;
    fn decode(&self, v: &serde_json::Value) -> Result<Self::Elem>;
}

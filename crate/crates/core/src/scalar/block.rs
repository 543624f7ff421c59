use num_rational::BigRational;
use rand::Rng;

use super::{Codec, Ring, SampleProfile, SampleRing};
use crate::error::{Error, Result};
use crate::matrix::NcMatrix;

/// `m x m` matrices over a base ring, stored row-major.
///
/// Used to lift scalars into a matrix ring (`a -> a * I_m`) when an identity
/// needs a matrix substituted for a central variable.
#[derive(Clone, Debug)]
pub struct BlockRing<R: Ring> {
    base: R,
    m: usize,
}

impl<R: Ring> BlockRing<R> {
    pub fn new(base: R, m: usize) -> Self {
        assert!(m >= 1, "block size must be positive");
        BlockRing { base, m }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// `a * I_m`.
    pub fn lift(&self, a: &R::Elem) -> Vec<R::Elem> {
        let m = self.m;
        (0..m * m).map(|k| if k / m == k % m { a.clone() } else { self.base.zero() }).collect()
    }

    pub fn from_matrix(&self, a: &NcMatrix<R::Elem>) -> Vec<R::Elem> {
        assert_eq!((a.nrows(), a.ncols()), (self.m, self.m), "block shape");
        a.entries().to_vec()
    }

    pub fn to_matrix(&self, a: &[R::Elem]) -> NcMatrix<R::Elem> {
        NcMatrix::from_rows(self.m, self.m, a.to_vec())
    }
}

impl<R: Ring> Ring for BlockRing<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.m * self.m]
    }

    fn one(&self) -> Self::Elem {
        self.lift(&self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let m = self.m;
        let mut out = self.zero();
        for i in 0..m {
            for k in 0..m {
                let x = &a[i * m + k];
                if self.base.is_zero(x) {
                    continue;
                }
                for j in 0..m {
                    let y = &b[k * m + j];
                    if !self.base.is_zero(y) {
                        out[i * m + j] = self.base.add(&out[i * m + j], &self.base.mul(x, y));
                    }
                }
            }
        }
        out
    }

    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let inv = self.base.invert_matrix(&self.to_matrix(a))?;
        Some(inv.entries().to_vec())
    }

    fn from_rational(&self, q: &BigRational) -> Self::Elem {
        self.lift(&self.base.from_rational(q))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|x| self.base.is_zero(x))
    }

    fn supports_flattening(&self) -> bool {
        self.base.supports_flattening()
    }

    /// Flattens the `n x n` block matrix into an `nm x nm` matrix over the
    /// base ring and re-blocks the inverse.
    fn invert_matrix(&self, mat: &NcMatrix<Self::Elem>) -> Option<NcMatrix<Self::Elem>> {
        if !mat.is_square() {
            return None;
        }
        let (n, m) = (mat.nrows(), self.m);
        let flat = NcMatrix::from_fn(n * m, n * m, |r, c| mat.at(r / m, c / m)[(r % m) * m + c % m].clone());
        let inv = self.base.invert_matrix(&flat)?;
        let mut data = Vec::with_capacity(n * n);
        for br in 0..n {
            for bc in 0..n {
                data.push((0..m * m).map(|k| inv.at(br * m + k / m, bc * m + k % m).clone()).collect());
            }
        }
        NcMatrix::new(mat.col_labels().to_vec(), mat.row_labels().to_vec(), data).ok()
    }
}

impl<R: SampleRing> SampleRing for BlockRing<R> {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, profile: &SampleProfile) -> Self::Elem {
        (0..self.m * self.m).map(|_| self.base.sample(rng, profile)).collect()
    }
}

impl<R: Codec> Codec for BlockRing<R> {
    fn encode(&self, a: &Self::Elem) -> serde_json::Value {
        let m = self.m;
        serde_json::Value::Array(
            (0..m).map(|r| serde_json::Value::Array((0..m).map(|c| self.base.encode(&a[r * m + c])).collect())).collect(),
        )
    }

    fn decode(&self, v: &serde_json::Value) -> Result<Self::Elem> {
        let bad = || Error::invalid(format!("expected a {0}x{0} block, got {v}", self.m));
        let rows = v.as_array().filter(|r| r.len() == self.m).ok_or_else(bad)?;
        let mut out = Vec::with_capacity(self.m * self.m);
        for row in rows {
            let cells = row.as_array().filter(|c| c.len() == self.m).ok_or_else(bad)?;
            for c in cells {
                out.push(self.base.decode(c)?);
            }
        }
        Ok(out)
    }
}

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::{Codec, Ring, SampleProfile, SampleRing};
use crate::error::{Error, Result};
use crate::linalg::{self, DenseQ};
use crate::matrix::NcMatrix;

/// A `d x d` matrix of exact rationals, used as a noncommutative scalar.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMat(DenseQ);

impl QMat {
    pub fn new(d: usize, data: Vec<BigRational>) -> Self {
        QMat(DenseQ::from_vec(d, d, data))
    }

    pub fn from_dense(m: DenseQ) -> Self {
        assert_eq!(m.rows(), m.cols(), "matrix scalar must be square");
        QMat(m)
    }

    pub fn from_i64(d: usize, values: &[i64]) -> Self {
        QMat(DenseQ::from_i64(d, d, values))
    }

    pub fn scalar(d: usize, q: &BigRational) -> Self {
        let mut m = DenseQ::zeros(d, d);
        if !q.is_zero() {
            for i in 0..d {
                m.set(i, i, q.clone());
            }
        }
        QMat(m)
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn dense(&self) -> &DenseQ {
        &self.0
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        self.0.get(r, c)
    }

    pub fn det(&self) -> BigRational {
        self.0.det_bareiss()
    }
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        let rows: Vec<String> = (0..d)
            .map(|r| {
                let cells: Vec<String> = (0..d).map(|c| linalg::rational_to_string(self.get(r, c))).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// The ring of `d x d` rational matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatRing {
    d: usize,
}

impl MatRing {
    pub fn new(d: usize) -> Self {
        assert!(d >= 1, "matrix scalar dimension must be positive");
        MatRing { d }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// Flatten a block matrix into one `(rows*d) x (cols*d)` rational matrix.
    pub fn flatten(&self, m: &NcMatrix<QMat>) -> DenseQ {
        let d = self.d;
        DenseQ::from_fn(m.nrows() * d, m.ncols() * d, |r, c| m.at(r / d, c / d).get(r % d, c % d).clone())
    }

    /// Inverse of [`MatRing::flatten`] for a given block shape.
    pub fn unflatten(&self, dense: &DenseQ, rows: Vec<usize>, cols: Vec<usize>) -> NcMatrix<QMat> {
        let d = self.d;
        let (nr, nc) = (rows.len(), cols.len());
        assert_eq!(dense.rows(), nr * d);
        assert_eq!(dense.cols(), nc * d);
        let mut data = Vec::with_capacity(nr * nc);
        for br in 0..nr {
            for bc in 0..nc {
                data.push(QMat::from_dense(DenseQ::from_fn(d, d, |r, c| dense.get(br * d + r, bc * d + c).clone())));
            }
        }
        NcMatrix::new(rows, cols, data).expect("unflatten preserves shape")
    }

    fn check(&self, a: &QMat) {
        debug_assert_eq!(a.dim(), self.d, "matrix scalar of the wrong dimension");
    }
}

impl Ring for MatRing {
    type Elem = QMat;

    fn zero(&self) -> QMat {
        QMat(DenseQ::zeros(self.d, self.d))
    }

    fn one(&self) -> QMat {
        QMat(DenseQ::identity(self.d))
    }

    fn add(&self, a: &QMat, b: &QMat) -> QMat {
        self.check(a);
        self.check(b);
        let data = a.0.data().iter().zip(b.0.data()).map(|(x, y)| x + y).collect();
        QMat::new(self.d, data)
    }

    fn neg(&self, a: &QMat) -> QMat {
        QMat::new(self.d, a.0.data().iter().map(|x| -x).collect())
    }

    fn sub(&self, a: &QMat, b: &QMat) -> QMat {
        let data = a.0.data().iter().zip(b.0.data()).map(|(x, y)| x - y).collect();
        QMat::new(self.d, data)
    }

    fn mul(&self, a: &QMat, b: &QMat) -> QMat {
        self.check(a);
        self.check(b);
        QMat(a.0.mul(&b.0))
    }

    fn try_inv(&self, a: &QMat) -> Option<QMat> {
        a.0.inverse().map(QMat)
    }

    fn from_rational(&self, q: &BigRational) -> QMat {
        QMat::scalar(self.d, q)
    }

    fn is_zero(&self, a: &QMat) -> bool {
        a.0.is_zero()
    }

    fn supports_flattening(&self) -> bool {
        true
    }

    fn invert_matrix(&self, m: &NcMatrix<QMat>) -> Option<NcMatrix<QMat>> {
        if !m.is_square() {
            return None;
        }
        let inv = self.flatten(m).inverse()?;
        Some(self.unflatten(&inv, m.col_labels().to_vec(), m.row_labels().to_vec()))
    }
}

impl SampleRing for MatRing {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, profile: &SampleProfile) -> QMat {
        let data = (0..self.d * self.d).map(|_| profile.sample_rational(rng)).collect();
        QMat::new(self.d, data)
    }
}

impl Codec for MatRing {
    fn encode(&self, a: &QMat) -> serde_json::Value {
        let rows = (0..self.d)
            .map(|r| {
                serde_json::Value::Array(
                    (0..self.d).map(|c| serde_json::Value::String(linalg::rational_to_string(a.get(r, c)))).collect(),
                )
            })
            .collect();
        serde_json::Value::Array(rows)
    }

    fn decode(&self, v: &serde_json::Value) -> Result<QMat> {
        let bad = || Error::invalid(format!("expected a {0}x{0} array of rational strings, got {v}", self.d));
        let rows = v.as_array().filter(|r| r.len() == self.d).ok_or_else(bad)?;
        let mut data = Vec::with_capacity(self.d * self.d);
        for row in rows {
            let cells = row.as_array().filter(|c| c.len() == self.d).ok_or_else(bad)?;
            for cell in cells {
                data.push(cell.as_str().and_then(linalg::parse_rational).ok_or_else(bad)?);
            }
        }
        Ok(QMat::new(self.d, data))
    }
}

impl QMat {
    pub fn is_identity(&self) -> bool {
        let d = self.dim();
        (0..d).all(|r| (0..d).all(|c| if r == c { self.get(r, c).is_one() } else { self.get(r, c).is_zero() }))
    }
}

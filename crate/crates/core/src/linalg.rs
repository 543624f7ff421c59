//! Dense exact linear algebra over the rationals.
//!
//! Commutative workhorse used for flattened inversion of block matrices,
//! kernel construction, and the determinant/rank oracles. Nothing here
//! goes through quasideterminants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row-major dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DenseQ {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl DenseQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseQ { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigRational>) -> Self {
        assert_eq!(data.len(), rows * cols, "dense matrix data length");
        DenseQ { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        DenseQ { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, values: &[i64]) -> Self {
        Self::from_vec(rows, cols, values.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[BigRational] {
        &self.data
    }

    pub fn into_data(self) -> Vec<BigRational> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &DenseQ) -> DenseQ {
        assert_eq!(self.cols, other.rows, "dense product shape");
        let mut out = DenseQ::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Gauss–Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<DenseQ> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = DenseQ::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).recip();
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                a.axpy_row(r, col, &f);
                inv.axpy_row(r, col, &f);
            }
        }
        Some(inv)
    }

    /// Determinant by Bareiss fraction-free elimination on an integer
    /// rescaling of the rows.
    pub fn det_bareiss(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigRational::one();
        }
        // Clear denominators row by row: det(A) = det(M) / prod(scale_r).
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let row = &self.data[r * n..(r + 1) * n];
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            m.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
            scale *= lcm;
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigRational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        BigRational::new(sign * &m[n - 1][n - 1], scale)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ v : self * v = 0 }`, one vector per free column.
    pub fn right_kernel(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (DenseQ, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(p, row);
            let inv = a.get(row, col).recip();
            a.scale_row(row, &inv);
            for r in 0..a.rows {
                if r != row {
                    let f = a.get(r, col).clone();
                    if !f.is_zero() {
                        a.axpy_row(r, row, &f);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, f: &BigRational) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            if !self.data[idx].is_zero() {
                self.data[idx] = &self.data[idx] * f;
            }
        }
    }

    /// row[target] -= f * row[source]
    fn axpy_row(&mut self, target: usize, source: usize, f: &BigRational) {
        for c in 0..self.cols {
            let s = &self.data[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let delta = f * s;
            self.data[target * self.cols + c] -= delta;
        }
    }
}

/// Canonical "p/q" text for a rational ("p" when integral).
pub fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Total bit size of numerators and denominators; a growth diagnostic.
pub fn bit_size(q: &BigRational) -> u64 {
    q.numer().abs().bits() + q.denom().bits()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_of_two_by_two() {
        let a = DenseQ::from_i64(2, 2, &[1, 2, 3, 4]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv.data(), &[q(-2, 1), q(1, 1), q(3, 2), q(-1, 2)]);
        assert_eq!(a.mul(&inv), DenseQ::identity(2));
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = DenseQ::from_i64(2, 2, &[1, 2, 2, 4]);
        assert!(a.inverse().is_none());
        assert_eq!(a.rank(), 1);
        assert!(a.det_bareiss().is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let a = DenseQ::from_vec(
            3,
            3,
            vec![q(1, 2), q(0, 1), q(1, 1), q(2, 1), q(1, 3), q(0, 1), q(0, 1), q(3, 1), q(1, 1)],
        );
        // 1/2*(1/3*1 - 0*3) - 0 + 1*(2*3 - 1/3*0) = 1/6 + 6
        assert_eq!(a.det_bareiss(), q(37, 6));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = DenseQ::from_i64(2, 4, &[1, 2, 3, 4, 2, 1, 0, -1]);
        let ker = a.right_kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            let col = DenseQ::from_vec(4, 1, v);
            assert!(a.mul(&col).is_zero());
        }
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "-3", "7/2", "-1/9"] {
            assert_eq!(rational_to_string(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4/-6").unwrap(), q(-2, 3));
        assert!(parse_rational("1/0").is_none());
    }
}

//! Labeled rectangular matrices over a [`Ring`].
//!
//! Rows and columns carry 1-based labels that survive deletion and
//! selection, so `A^{pq}` still knows which rows of `A` it came from.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::scalar::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct NcMatrix<E> {
    rows: Vec<usize>,
    cols: Vec<usize>,
    data: Vec<E>,
}

fn check_labels(axis: &str, labels: &[usize]) -> Result<()> {
    let mut seen = HashSet::new();
    for &l in labels {
        if !seen.insert(l) {
            return Err(Error::Shape(format!("duplicate {axis} label {l}")));
        }
    }
    Ok(())
}

impl<E: Clone> NcMatrix<E> {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, data: Vec<E>) -> Result<Self> {
        if data.len() != rows.len() * cols.len() {
            return Err(Error::Shape(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows.len(),
                cols.len()
            )));
        }
        check_labels("row", &rows)?;
        check_labels("column", &cols)?;
        Ok(NcMatrix { rows, cols, data })
    }

    /// Row-major entries with labels `1..=n`, `1..=m`.
    pub fn from_rows(n: usize, m: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), n * m, "matrix data length");
        NcMatrix { rows: (1..=n).collect(), cols: (1..=m).collect(), data }
    }

    /// Entry at position `(r, c)` is `f(r, c)`, 0-based; labels are `1..`.
    pub fn from_fn(n: usize, m: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(n * m);
        for r in 0..n {
            for c in 0..m {
                data.push(f(r, c));
            }
        }
        Self::from_rows(n, m, data)
    }

    pub fn from_nested(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Self::from_rows(n, m, rows.into_iter().flatten().collect()))
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    pub fn row_labels(&self) -> &[usize] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[usize] {
        &self.cols
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    /// Positional (0-based) access.
    pub fn at(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols.len() + c]
    }

    pub fn row_pos(&self, i: usize) -> Result<usize> {
        self.rows.iter().position(|&l| l == i).ok_or(Error::UnknownIndex { axis: "row", index: i })
    }

    pub fn col_pos(&self, j: usize) -> Result<usize> {
        self.cols.iter().position(|&l| l == j).ok_or(Error::UnknownIndex { axis: "column", index: j })
    }

    /// Access by label.
    pub fn get(&self, i: usize, j: usize) -> Result<&E> {
        Ok(self.at(self.row_pos(i)?, self.col_pos(j)?))
    }

    /// Entry by label; panics on an unknown label.
    pub fn e(&self, i: usize, j: usize) -> &E {
        self.get(i, j).expect("label present")
    }

    pub fn row(&self, i: usize) -> Result<Vec<E>> {
        let r = self.row_pos(i)?;
        Ok((0..self.ncols()).map(|c| self.at(r, c).clone()).collect())
    }

    pub fn col(&self, j: usize) -> Result<Vec<E>> {
        let c = self.col_pos(j)?;
        Ok((0..self.nrows()).map(|r| self.at(r, c).clone()).collect())
    }

    /// `A^{pq}`: delete row `p` and column `q`.
    pub fn delete_row_col(&self, p: usize, q: usize) -> Result<Self> {
        self.delete_sets(&[p], &[q])
    }

    /// `A^{L,M}`: delete the rows in `L` and the columns in `M`.
    pub fn delete_sets(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        for &i in rows {
            self.row_pos(i)?;
        }
        for &j in cols {
            self.col_pos(j)?;
        }
        let keep_r: Vec<usize> = self.rows.iter().copied().filter(|i| !rows.contains(i)).collect();
        let keep_c: Vec<usize> = self.cols.iter().copied().filter(|j| !cols.contains(j)).collect();
        self.select(&keep_r, &keep_c)
    }

    /// `A_{PQ}`: the submatrix on the given labels, in the order given.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        let rp: Vec<usize> = rows.iter().map(|&i| self.row_pos(i)).collect::<Result<_>>()?;
        let cp: Vec<usize> = cols.iter().map(|&j| self.col_pos(j)).collect::<Result<_>>()?;
        let mut data = Vec::with_capacity(rp.len() * cp.len());
        for &r in &rp {
            for &c in &cp {
                data.push(self.at(r, c).clone());
            }
        }
        Self::new(rows.to_vec(), cols.to_vec(), data)
    }

    /// Submatrix by positions, relabeled `1..`. Positions may repeat.
    pub fn select_positions(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.at(rows[r], cols[c]).clone())
    }

    /// Cut into consecutive blocks of the given sizes. Block `(s, t)` keeps
    /// the original labels.
    pub fn block_partition(&self, row_sizes: &[usize], col_sizes: &[usize]) -> Result<Vec<Vec<Self>>> {
        if row_sizes.iter().sum::<usize>() != self.nrows() || col_sizes.iter().sum::<usize>() != self.ncols() {
            return Err(Error::Shape("block sizes do not cover the matrix".into()));
        }
        let cuts = |sizes: &[usize], labels: &[usize]| {
            let mut out = Vec::new();
            let mut start = 0;
            for &s in sizes {
                out.push(labels[start..start + s].to_vec());
                start += s;
            }
            out
        };
        let rb = cuts(row_sizes, &self.rows);
        let cb = cuts(col_sizes, &self.cols);
        rb.iter().map(|r| cb.iter().map(|c| self.select(r, c)).collect()).collect()
    }

    pub fn relabeled(&self, rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        Self::new(rows, cols, self.data.clone())
    }

    /// Labels reset to `1..=n`, `1..=m`.
    pub fn normalized(&self) -> Self {
        Self::from_rows(self.nrows(), self.ncols(), self.data.clone())
    }

    pub fn transpose(&self) -> Self {
        let (n, m) = (self.nrows(), self.ncols());
        let mut data = Vec::with_capacity(n * m);
        for c in 0..m {
            for r in 0..n {
                data.push(self.at(r, c).clone());
            }
        }
        NcMatrix { rows: self.cols.clone(), cols: self.rows.clone(), data }
    }

    pub fn map<F, T>(&self, f: F) -> NcMatrix<T>
    where
        F: FnMut(&E) -> T,
    {
        NcMatrix { rows: self.rows.clone(), cols: self.cols.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<F, T>(&self, f: F) -> Result<NcMatrix<T>>
    where
        F: FnMut(&E) -> Result<T>,
    {
        Ok(NcMatrix { rows: self.rows.clone(), cols: self.cols.clone(), data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn with_entry(&self, i: usize, j: usize, v: E) -> Result<Self> {
        let (r, c) = (self.row_pos(i)?, self.col_pos(j)?);
        let mut out = self.clone();
        let m = out.ncols();
        out.data[r * m + c] = v;
        Ok(out)
    }

    /// Replace column `j` by `v` (top to bottom), keeping its label.
    pub fn replace_column(&self, j: usize, v: &[E]) -> Result<Self> {
        let c = self.col_pos(j)?;
        if v.len() != self.nrows() {
            return Err(Error::Shape("column length".into()));
        }
        let mut out = self.clone();
        let m = out.ncols();
        for (r, x) in v.iter().enumerate() {
            out.data[r * m + c] = x.clone();
        }
        Ok(out)
    }

    pub fn permute_rows(&self, order: &[usize]) -> Result<Self> {
        self.select(order, &self.cols.clone())
    }

    pub fn permute_cols(&self, order: &[usize]) -> Result<Self> {
        self.select(&self.rows.clone(), order)
    }
}

impl<E: Clone> NcMatrix<E> {
    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { ring.one() } else { ring.zero() })
    }

    pub fn zeros<R: Ring<Elem = E>>(ring: &R, n: usize, m: usize) -> Self {
        Self::from_fn(n, m, |_, _| ring.zero())
    }

    /// Positional product; labels are the rows of `self` and columns of `o`.
    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Result<Self> {
        if self.ncols() != o.nrows() {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                o.nrows(),
                o.ncols()
            )));
        }
        let (n, k, m) = (self.nrows(), self.ncols(), o.ncols());
        let mut data = Vec::with_capacity(n * m);
        for r in 0..n {
            for c in 0..m {
                let mut acc = ring.zero();
                for t in 0..k {
                    let x = self.at(r, t);
                    if ring.is_zero(x) {
                        continue;
                    }
                    let y = o.at(t, c);
                    if !ring.is_zero(y) {
                        acc = ring.add(&acc, &ring.mul(x, y));
                    }
                }
                data.push(acc);
            }
        }
        Self::new(self.rows.clone(), o.cols.clone(), data)
    }

    fn zip<R: Ring<Elem = E>>(&self, o: &Self, f: impl Fn(&E, &E) -> E) -> Result<Self> {
        if (self.nrows(), self.ncols()) != (o.nrows(), o.ncols()) {
            return Err(Error::Shape("entrywise operation on different shapes".into()));
        }
        let data = self.data.iter().zip(&o.data).map(|(x, y)| f(x, y)).collect();
        Self::new(self.rows.clone(), self.cols.clone(), data)
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Result<Self> {
        self.zip::<R>(o, |x, y| ring.add(x, y))
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Result<Self> {
        self.zip::<R>(o, |x, y| ring.sub(x, y))
    }

    /// Row `i` += `lambda * row k` (left multiplication).
    pub fn row_op_left<R: Ring<Elem = E>>(&self, ring: &R, i: usize, k: usize, lambda: &E) -> Result<Self> {
        let (ri, rk) = (self.row_pos(i)?, self.row_pos(k)?);
        let mut out = self.clone();
        let m = self.ncols();
        for c in 0..m {
            out.data[ri * m + c] = ring.add(self.at(ri, c), &ring.mul(lambda, self.at(rk, c)));
        }
        Ok(out)
    }

    /// Column `j` += `column l * mu` (right multiplication).
    pub fn col_op_right<R: Ring<Elem = E>>(&self, ring: &R, j: usize, l: usize, mu: &E) -> Result<Self> {
        let (cj, cl) = (self.col_pos(j)?, self.col_pos(l)?);
        let mut out = self.clone();
        let m = self.ncols();
        for r in 0..self.nrows() {
            out.data[r * m + cj] = ring.add(self.at(r, cj), &ring.mul(self.at(r, cl), mu));
        }
        Ok(out)
    }

    /// Row `i` := `lambda * row i`.
    pub fn scale_row_left<R: Ring<Elem = E>>(&self, ring: &R, i: usize, lambda: &E) -> Result<Self> {
        let ri = self.row_pos(i)?;
        let mut out = self.clone();
        let m = self.ncols();
        for c in 0..m {
            out.data[ri * m + c] = ring.mul(lambda, self.at(ri, c));
        }
        Ok(out)
    }

    /// Column `j` := `column j * mu`.
    pub fn scale_col_right<R: Ring<Elem = E>>(&self, ring: &R, j: usize, mu: &E) -> Result<Self> {
        let cj = self.col_pos(j)?;
        let mut out = self.clone();
        let m = self.ncols();
        for r in 0..self.nrows() {
            out.data[r * m + cj] = ring.mul(self.at(r, cj), mu);
        }
        Ok(out)
    }

    pub fn is_zero<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        self.data.iter().all(|x| ring.is_zero(x))
    }

    pub fn is_identity<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        let one = ring.one();
        let eq = |x: &E| ring.is_zero(&ring.sub(x, &one));
        self.is_square()
            && (0..self.nrows())
                .all(|r| (0..self.ncols()).all(|c| if r == c { eq(self.at(r, c)) } else { ring.is_zero(self.at(r, c)) }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{MatRing, QMat, QRing};
    use num_rational::BigRational;

    fn int_matrix(n: usize, m: usize, v: &[i64]) -> NcMatrix<BigRational> {
        NcMatrix::from_rows(n, m, v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    #[test]
    fn deleting_from_two_by_two_leaves_the_opposite_corner() {
        let a = int_matrix(2, 2, &[1, 2, 3, 4]);
        let b = a.delete_row_col(1, 1).unwrap();
        assert_eq!(b.row_labels(), &[2]);
        assert_eq!(b.col_labels(), &[2]);
        assert_eq!(b.at(0, 0), &BigRational::from_integer(4.into()));
    }

    #[test]
    fn delete_sets_keeps_labels() {
        let a = int_matrix(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let b = a.delete_sets(&[1], &[2, 3]).unwrap();
        assert_eq!((b.row_labels(), b.col_labels()), (&[2, 3][..], &[1][..]));
        assert_eq!(b.entries(), int_matrix(2, 1, &[4, 7]).entries());
        assert_eq!(a.select(&[1, 2, 3], &[1, 2, 3]).unwrap(), a);
        assert!(matches!(a.delete_row_col(4, 1), Err(Error::UnknownIndex { axis: "row", index: 4 })));
    }

    #[test]
    fn duplicate_labels_are_rejected() {
        assert!(NcMatrix::new(vec![1, 1], vec![1], vec![0, 0]).is_err());
    }

    #[test]
    fn one_sided_operations_respect_order() {
        let ring = MatRing::new(2);
        let x = QMat::from_i64(2, &[0, 1, 0, 0]);
        let y = QMat::from_i64(2, &[0, 0, 1, 0]);
        let lam = QMat::from_i64(2, &[1, 2, 3, 4]);
        let a = NcMatrix::from_rows(2, 1, vec![x.clone(), y.clone()]);
        let b = a.row_op_left(&ring, 1, 2, &lam).unwrap();
        assert_eq!(b.e(1, 1), &ring.add(&x, &ring.mul(&lam, &y)));
        assert_ne!(b.e(1, 1), &ring.add(&x, &ring.mul(&y, &lam)));
        let c = a.transpose().col_op_right(&ring, 1, 2, &lam).unwrap();
        assert_eq!(c.e(1, 1), &ring.add(&x, &ring.mul(&y, &lam)));
        assert_eq!(a.row_op_left(&ring, 1, 2, &ring.zero()).unwrap(), a);
    }

    #[test]
    fn block_partition_covers_matrix() {
        let a = int_matrix(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let blocks = a.block_partition(&[1, 2], &[2, 1]).unwrap();
        assert_eq!(blocks[1][0].row_labels(), &[2, 3]);
        assert_eq!(blocks[1][0].entries(), int_matrix(2, 2, &[4, 5, 7, 8]).entries());
        let id = NcMatrix::identity(&QRing, 3);
        assert_eq!(a.mul(&QRing, &id).unwrap(), a);
    }
}

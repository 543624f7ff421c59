//! Quasideterminants and the linear algebra built on them.
//!
//! All row/column arguments are labels of the matrix, not positions.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::formula::{FormulaRing, RatFormula};
use crate::matrix::NcMatrix;
use crate::scalar::{BlockRing, Ring};

/// How `|A|_pq` is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// `a_pq - sum_{i != p, j != q} a_pj |A^{pq}|_ij^{-1} a_iq`, memoized
    /// over (row set, column set, p, q).
    Recursive,
    /// `a_pq - sum a_pj b_ji a_iq` with `(b_ji) = (A^{pq})^{-1}`.
    MinorInverse,
    /// MinorInverse when the ring inverts by flattening or `n >= 4`,
    /// Recursive otherwise.
    #[default]
    Auto,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "recursive" => Ok(Method::Recursive),
            "minor-inverse" | "minorinverse" | "minor_inverse" => Ok(Method::MinorInverse),
            "auto" => Ok(Method::Auto),
            _ => Err(Error::invalid(format!("unknown method `{s}` (recursive, minor-inverse, auto)"))),
        }
    }
}

fn resolve<R: Ring>(ring: &R, n: usize, method: Method) -> Method {
    match method {
        Method::Auto if ring.supports_flattening() || n >= 4 => Method::MinorInverse,
        Method::Auto => Method::Recursive,
        m => m,
    }
}

fn require_square<E: Clone>(a: &NcMatrix<E>) -> Result<()> {
    if a.nrows() == 0 || !a.is_square() {
        return Err(Error::Shape(format!("quasideterminant of a {}x{} matrix", a.nrows(), a.ncols())));
    }
    Ok(())
}

/// Memo table for the recursive definition on one matrix.
struct Recursive<'a, R: Ring> {
    ring: &'a R,
    a: &'a NcMatrix<R::Elem>,
    memo: HashMap<(u64, u64, usize, usize), Result<R::Elem>>,
}

impl<'a, R: Ring> Recursive<'a, R> {
    fn new(ring: &'a R, a: &'a NcMatrix<R::Elem>) -> Result<Self> {
        if a.nrows() > 64 {
            return Err(Error::Shape("recursive quasideterminants support at most 64 rows".into()));
        }
        Ok(Recursive { ring, a, memo: HashMap::new() })
    }

    fn full(&self) -> u64 {
        if self.a.nrows() == 64 {
            u64::MAX
        } else {
            (1u64 << self.a.nrows()) - 1
        }
    }

    /// `|A_{rows, cols}|_{p q}` with everything in positions.
    fn eval(&mut self, rows: u64, cols: u64, p: usize, q: usize) -> Result<R::Elem> {
        if let Some(v) = self.memo.get(&(rows, cols, p, q)) {
            return v.clone();
        }
        let v = self.compute(rows, cols, p, q);
        self.memo.insert((rows, cols, p, q), v.clone());
        v
    }

    fn compute(&mut self, rows: u64, cols: u64, p: usize, q: usize) -> Result<R::Elem> {
        let ring = self.ring;
        let a = self.a;
        let mut acc = a.at(p, q).clone();
        let (rows2, cols2) = (rows & !(1 << p), cols & !(1 << q));
        for i in bits(rows2) {
            for j in bits(cols2) {
                let inner = self.eval(rows2, cols2, i, j)?;
                let inv = ring.try_inv(&inner).ok_or_else(|| {
                    Error::domain(format!(
                        "quasiminor |A^{{{},{}}}|_{{{},{}}} is not invertible",
                        a.row_labels()[p],
                        a.col_labels()[q],
                        a.row_labels()[i],
                        a.col_labels()[j]
                    ))
                })?;
                let term = ring.mul(&ring.mul(a.at(p, j), &inv), a.at(i, q));
                acc = ring.sub(&acc, &term);
            }
        }
        Ok(acc)
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |k| mask & (1 << k) != 0)
}

/// `|A|_pq`.
pub fn qdet<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, p: usize, q: usize, method: Method) -> Result<R::Elem> {
    require_square(a)?;
    let (rp, cq) = (a.row_pos(p)?, a.col_pos(q)?);
    if a.nrows() == 1 {
        return Ok(a.at(0, 0).clone());
    }
    match resolve(ring, a.nrows(), method) {
        Method::Recursive => {
            let mut rec = Recursive::new(ring, a)?;
            let full = rec.full();
            rec.eval(full, full, rp, cq)
        }
        _ => minor_inverse(ring, a, p, q),
    }
}

fn minor_inverse<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, p: usize, q: usize) -> Result<R::Elem> {
    let minor = a.delete_row_col(p, q)?;
    let b = ring
        .invert_matrix(&minor)
        .ok_or_else(|| Error::domain(format!("A^{{{p},{q}}} is not invertible")))?;
    let (rp, cq) = (a.row_pos(p)?, a.col_pos(q)?);
    let mut acc = a.at(rp, cq).clone();
    // b is labeled (columns of the minor) x (rows of the minor)
    for (ri, &i) in minor.row_labels().iter().enumerate() {
        let a_iq = a.e(i, q);
        for (cj, &j) in minor.col_labels().iter().enumerate() {
            let term = ring.mul(&ring.mul(a.e(p, j), b.at(cj, ri)), a_iq);
            acc = ring.sub(&acc, &term);
        }
    }
    Ok(acc)
}

/// All `n^2` quasideterminants `(|A|_ij)`, labeled like `A`.
pub fn all_qdets<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, method: Method) -> Result<NcMatrix<R::Elem>> {
    require_square(a)?;
    let n = a.nrows();
    let mut data = Vec::with_capacity(n * n);
    match resolve(ring, n, method) {
        Method::Recursive if n > 1 => {
            let mut rec = Recursive::new(ring, a)?;
            let full = rec.full();
            for r in 0..n {
                for c in 0..n {
                    data.push(rec.eval(full, full, r, c)?);
                }
            }
        }
        m => {
            for &i in a.row_labels() {
                for &j in a.col_labels() {
                    data.push(qdet(ring, a, i, j, m)?);
                }
            }
        }
    }
    NcMatrix::new(a.row_labels().to_vec(), a.col_labels().to_vec(), data)
}

/// `A^{-1}` with `b_ij = |A|_ji^{-1}`, computed by the recursive definition.
/// Rows are labeled by the columns of `A` and vice versa.
pub fn inverse_by_quasideterminants<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>) -> Result<NcMatrix<R::Elem>> {
    inverse_via(ring, a, Method::Recursive)
}

/// `A^{-1}` from quasideterminants computed with `method`.
pub fn inverse_via<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, method: Method) -> Result<NcMatrix<R::Elem>> {
    if a.nrows() == 0 && a.ncols() == 0 {
        return Ok(a.clone());
    }
    let hi = all_qdets(ring, a, method)?;
    hadamard_inverse(ring, &hi)
}

/// `A^{-1}` using the ring's preferred inversion.
pub fn matrix_inverse<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>) -> Result<NcMatrix<R::Elem>> {
    if !a.is_square() {
        return Err(Error::Shape("inverse of a non-square matrix".into()));
    }
    ring.invert_matrix(a).ok_or_else(|| Error::domain("matrix is not invertible"))
}

/// `H(A) = (a_ji^{-1})`.
pub fn hadamard_inverse<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>) -> Result<NcMatrix<R::Elem>> {
    let t = a.transpose();
    t.try_map(|x| ring.try_inv(x).ok_or_else(|| Error::domain("Hadamard inverse of a non-invertible entry")))
}

/// Index along which [`qdet_expansion`] expands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// `|A|_pq = a_pq - sum_{j != q} a_pj |A^{pq}|_kj^{-1} |A^{pj}|_kq`
    Row(usize),
    /// `|A|_pq = a_pq - sum_{i != p} |A^{iq}|_{p l} |A^{pq}|_{i l}^{-1} a_iq`
    Column(usize),
}

/// Default expansion index: the smallest row (column) label other than the
/// pivot.
pub fn default_expansion<E: Clone>(a: &NcMatrix<E>, p: usize, q: usize, by_row: bool) -> Option<Expansion> {
    if by_row {
        a.row_labels().iter().copied().filter(|&k| k != p).min().map(Expansion::Row)
    } else {
        a.col_labels().iter().copied().filter(|&l| l != q).min().map(Expansion::Column)
    }
}

/// `|A|_pq` by expansion along a row or column.
pub fn qdet_expansion<R: Ring>(
    ring: &R,
    a: &NcMatrix<R::Elem>,
    p: usize,
    q: usize,
    mode: Expansion,
    method: Method,
) -> Result<R::Elem> {
    require_square(a)?;
    a.row_pos(p)?;
    a.col_pos(q)?;
    let mut acc = a.e(p, q).clone();
    let inv = |x: R::Elem, what: &dyn Fn() -> String| ring.try_inv(&x).ok_or_else(|| Error::domain(what()));
    match mode {
        Expansion::Row(k) => {
            if k == p {
                return Err(Error::invalid("expansion row must differ from the pivot row"));
            }
            a.row_pos(k)?;
            let apq = a.delete_row_col(p, q)?;
            for &j in a.col_labels().iter().filter(|&&j| j != q) {
                let mid = inv(qdet(ring, &apq, k, j, method)?, &|| format!("|A^{{{p},{q}}}|_{{{k},{j}}} is not invertible"))?;
                let right = qdet(ring, &a.delete_row_col(p, j)?, k, q, method)?;
                acc = ring.sub(&acc, &ring.mul(&ring.mul(a.e(p, j), &mid), &right));
            }
        }
        Expansion::Column(l) => {
            if l == q {
                return Err(Error::invalid("expansion column must differ from the pivot column"));
            }
            a.col_pos(l)?;
            let apq = a.delete_row_col(p, q)?;
            for &i in a.row_labels().iter().filter(|&&i| i != p) {
                let left = qdet(ring, &a.delete_row_col(i, q)?, p, l, method)?;
                let mid = inv(qdet(ring, &apq, i, l, method)?, &|| format!("|A^{{{p},{q}}}|_{{{i},{l}}} is not invertible"))?;
                acc = ring.sub(&acc, &ring.mul(&ring.mul(&left, &mid), a.e(i, q)));
            }
        }
    }
    Ok(acc)
}

/// Block quasideterminant `|Ã|_pq` of `A` cut into consecutive blocks of the
/// given sizes: `A_pq - A_{p,*} (Ã^{pq})^{-1} A_{*,q}`, where `Ã^{pq}` is the
/// block matrix with block row `p` and block column `q` removed. The result
/// keeps the labels of block `(p, q)`. Blocks are numbered from 1.
pub fn block_qdet<R: Ring>(
    ring: &R,
    a: &NcMatrix<R::Elem>,
    row_sizes: &[usize],
    col_sizes: &[usize],
    (bp, bq): (usize, usize),
) -> Result<NcMatrix<R::Elem>> {
    require_square(a)?;
    let blocks = a.block_partition(row_sizes, col_sizes)?;
    if bp == 0 || bq == 0 || bp > row_sizes.len() || bq > col_sizes.len() {
        return Err(Error::invalid(format!("block pivot ({bp},{bq}) out of range")));
    }
    let pivot = &blocks[bp - 1][bq - 1];
    if !pivot.is_square() {
        return Err(Error::Shape("pivot block is not square".into()));
    }
    let (prow, pcol) = (pivot.row_labels().to_vec(), pivot.col_labels().to_vec());
    if prow.len() == a.nrows() {
        return Ok(pivot.clone());
    }
    let rest_rows: Vec<usize> = a.row_labels().iter().copied().filter(|i| !prow.contains(i)).collect();
    let rest_cols: Vec<usize> = a.col_labels().iter().copied().filter(|j| !pcol.contains(j)).collect();
    let minor = a.select(&rest_rows, &rest_cols)?;
    let inv = matrix_inverse(ring, &minor)?;
    let left = a.select(&prow, &rest_cols)?;
    let right = a.select(&rest_rows, &pcol)?;
    let correction = left.mul(ring, &inv)?.mul(ring, &right)?;
    pivot.sub(ring, &correction)
}

/// `||Ã|_pq|_{k' l'}` for a block partition of `A`; the inner pivot is given
/// by labels of `A` that lie in block `(p, q)`.
pub fn heredity_qdet<R: Ring>(
    ring: &R,
    a: &NcMatrix<R::Elem>,
    row_sizes: &[usize],
    col_sizes: &[usize],
    block_pivot: (usize, usize),
    (k, l): (usize, usize),
    method: Method,
) -> Result<R::Elem> {
    let reduced = block_qdet(ring, a, row_sizes, col_sizes, block_pivot)?;
    qdet(ring, &reduced, k, l, method)
}

/// The matrix `B = (b_pq)` of bordered quasideterminants over the pivot
/// `A_0 = A_{K,K}`: `b_pq = |A_{K+p, K+q}|_pq` (rows `K` then `p`, columns
/// `K` then `q`), for `p, q` outside `K`.
pub fn sylvester_matrix<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, k: &[usize], method: Method) -> Result<NcMatrix<R::Elem>> {
    require_square(a)?;
    for &x in k {
        a.row_pos(x)?;
        a.col_pos(x)?;
    }
    if !k.is_empty() {
        matrix_inverse(ring, &a.select(k, k)?).map_err(|_| Error::domain("pivot block A_0 is not invertible"))?;
    }
    let rows: Vec<usize> = a.row_labels().iter().copied().filter(|i| !k.contains(i)).collect();
    let cols: Vec<usize> = a.col_labels().iter().copied().filter(|j| !k.contains(j)).collect();
    let mut data = Vec::with_capacity(rows.len() * cols.len());
    for &p in &rows {
        for &q in &cols {
            let mut rs = k.to_vec();
            rs.push(p);
            let mut cs = k.to_vec();
            cs.push(q);
            data.push(qdet(ring, &a.select(&rs, &cs)?, p, q, method)?);
        }
    }
    NcMatrix::new(rows, cols, data)
}

/// `|B|_ij` for the Sylvester matrix `B` over the pivot `K`.
pub fn sylvester_reduce<R: Ring>(
    ring: &R,
    a: &NcMatrix<R::Elem>,
    k: &[usize],
    i: usize,
    j: usize,
    method: Method,
) -> Result<R::Elem> {
    let b = sylvester_matrix(ring, a, k, method)?;
    qdet(ring, &b, i, j, method)
}

/// Solution of `A x = xi` as `x_i = sum_j |A|_ji^{-1} xi_j`. Indexed by the
/// column labels of `A`; `xi` is indexed by its rows.
pub fn solve_system<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, xi: &[R::Elem], method: Method) -> Result<Vec<R::Elem>> {
    require_square(a)?;
    if xi.len() != a.nrows() {
        return Err(Error::Shape("right-hand side length".into()));
    }
    let qd = all_qdets(ring, a, method)?;
    let mut x = Vec::with_capacity(a.ncols());
    for c in 0..a.ncols() {
        let mut acc = ring.zero();
        for (r, xr) in xi.iter().enumerate() {
            let inv = ring
                .try_inv(qd.at(r, c))
                .ok_or_else(|| Error::domain(format!("|A|_{{{},{}}} is not invertible", a.row_labels()[r], a.col_labels()[c])))?;
            acc = ring.add(&acc, &ring.mul(&inv, xr));
        }
        x.push(acc);
    }
    Ok(x)
}

/// `(|A|_ij x_j, |A_j(xi)|_ij)` where `x` solves `A x = xi` and `A_j(xi)` is
/// `A` with column `j` replaced by `xi`.
pub fn cramer_check<R: Ring>(
    ring: &R,
    a: &NcMatrix<R::Elem>,
    xi: &[R::Elem],
    i: usize,
    j: usize,
    method: Method,
) -> Result<(R::Elem, R::Elem)> {
    let x = solve_system(ring, a, xi, method)?;
    let xj = &x[a.col_pos(j)?];
    let lhs = ring.mul(&qdet(ring, a, i, j, method)?, xj);
    let rhs = qdet(ring, &a.replace_column(j, xi)?, i, j, method)?;
    Ok((lhs, rhs))
}

/// `f_ij(A)` for `f_ij(t) = |t I_n - A|_ij`, with the entries lifted to
/// `a_ij I_n` and `t := A`, evaluated in `n x n` matrices over the base
/// ring. Each entry is an `n x n` matrix, row-major.
pub fn cayley_hamilton<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>) -> Result<NcMatrix<Vec<R::Elem>>> {
    require_square(a)?;
    let n = a.nrows();
    let block = BlockRing::new(ring.clone(), n);
    let t = a.entries().to_vec();
    let m = NcMatrix::from_fn(n, n, |r, c| {
        let lifted = block.lift(a.at(r, c));
        if r == c {
            block.sub(&t, &lifted)
        } else {
            block.neg(&lifted)
        }
    })
    .relabeled(a.row_labels().to_vec(), a.col_labels().to_vec())?;
    all_qdets(&block, &m, Method::Recursive)
}

/// Largest `r` such that some `r x r` quasiminor is defined and nonzero.
/// Exhaustive; exact for commutative rings, a lower bound otherwise.
pub fn rank_by_quasiminors<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, method: Method) -> usize {
    let (n, m) = (a.nrows(), a.ncols());
    for r in (1..=n.min(m)).rev() {
        for rows in subsets(a.row_labels(), r) {
            for cols in subsets(a.col_labels(), r) {
                let sub = a.select(&rows, &cols).expect("labels from the matrix");
                for &i in &rows {
                    for &j in &cols {
                        if let Ok(v) = qdet(ring, &sub, i, j, method) {
                            if !ring.is_zero(&v) {
                                return r;
                            }
                        }
                    }
                }
            }
        }
    }
    0
}

/// All `k`-element subsets of `items`, order preserved.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..items.len() {
            if items.len() - s < k - cur.len() {
                break;
            }
            cur.push(items[s]);
            go(items, k, s + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// The `n x n` matrix of variables `a_ij`.
pub fn generic_matrix(n: usize) -> NcMatrix<RatFormula> {
    NcMatrix::from_fn(n, n, |r, c| RatFormula::var(format!("a_{}_{}", r + 1, c + 1)))
}

/// `|A|_pq` of the generic `n x n` matrix as a formula, built by the
/// recursive definition.
pub fn qdet_formula(n: usize, p: usize, q: usize) -> Result<RatFormula> {
    qdet(&FormulaRing, &generic_matrix(n), p, q, Method::Recursive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DenseQ;
    use crate::scalar::{MatRing, QMat, QRing};
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn int_matrix(n: usize, v: &[i64]) -> NcMatrix<BigRational> {
        NcMatrix::from_rows(n, n, v.iter().map(|&x| q(x, 1)).collect())
    }

    #[test]
    fn two_by_two_corner() {
        let a = int_matrix(2, &[1, 2, 3, 4]);
        for m in [Method::Recursive, Method::MinorInverse, Method::Auto] {
            assert_eq!(qdet(&QRing, &a, 1, 1, m).unwrap(), q(-1, 2));
        }
    }

    #[test]
    fn three_by_three_matches_determinant_ratio() {
        let a = int_matrix(3, &[1, 0, 1, 2, 1, 0, 0, 3, 1]);
        assert_eq!(qdet(&QRing, &a, 2, 2, Method::Auto).unwrap(), q(7, 1));
        // a_31 = 0 is a 1x1 quasiminor the recursive definition must invert
        assert!(qdet(&QRing, &a, 2, 2, Method::Recursive).unwrap_err().is_domain());
        let det = DenseQ::from_vec(3, 3, a.entries().to_vec()).det_bareiss();
        let minor = a.delete_row_col(2, 2).unwrap();
        let det_minor = DenseQ::from_vec(2, 2, minor.entries().to_vec()).det_bareiss();
        assert_eq!(det / det_minor, q(7, 1));
    }

    #[test]
    fn identity_diagonal_is_one() {
        let id = NcMatrix::identity(&QRing, 4);
        for p in 1..=4 {
            assert_eq!(qdet(&QRing, &id, p, p, Method::MinorInverse).unwrap(), q(1, 1));
        }
        // off-diagonal quasideterminants of the identity need 0^{-1}
        assert!(qdet(&QRing, &id, 1, 2, Method::Recursive).unwrap_err().is_domain());
    }

    #[test]
    fn inverse_examples() {
        let a = int_matrix(2, &[1, 2, 3, 4]);
        let b = matrix_inverse(&QRing, &a).unwrap();
        assert_eq!(b.entries(), &[q(-2, 1), q(1, 1), q(3, 2), q(-1, 2)]);
        assert_eq!(inverse_by_quasideterminants(&QRing, &a).unwrap(), b);
        let h = hadamard_inverse(&QRing, &a).unwrap();
        assert_eq!(h.entries(), &[q(1, 1), q(1, 3), q(1, 2), q(1, 4)]);
        assert_eq!(hadamard_inverse(&QRing, &h).unwrap(), a);
        let d = int_matrix(2, &[2, 0, 0, 3]);
        assert_eq!(matrix_inverse(&QRing, &d).unwrap().entries(), &[q(1, 2), q(0, 1), q(0, 1), q(1, 3)]);
    }

    #[test]
    fn matrix_scalars_agree_across_methods() {
        let ring = MatRing::new(2);
        let vals = [[1, 2, 0, 1], [3, -1, 2, 2], [0, 1, 1, 0], [2, 2, -1, 3], [1, 0, 4, 1], [-2, 1, 1, 1], [5, 1, 0, 2], [1, 1, 1, -1], [0, 3, 2, 1]];
        let a = NcMatrix::from_rows(3, 3, vals.iter().map(|v| QMat::from_i64(2, v)).collect());
        for p in 1..=3 {
            for qq in 1..=3 {
                let r = qdet(&ring, &a, p, qq, Method::Recursive).unwrap();
                let m = qdet(&ring, &a, p, qq, Method::MinorInverse).unwrap();
                assert_eq!(r, m, "({p},{qq})");
            }
        }
        let flat = matrix_inverse(&ring, &a).unwrap();
        assert_eq!(inverse_by_quasideterminants(&ring, &a).unwrap(), flat);
        assert!(a.mul(&ring, &flat).unwrap().is_identity(&ring));
    }

    #[test]
    fn expansion_of_two_by_two_is_the_definition() {
        let a = int_matrix(2, &[1, 2, 3, 4]);
        let row = qdet_expansion(&QRing, &a, 1, 1, Expansion::Row(2), Method::Auto).unwrap();
        let col = qdet_expansion(&QRing, &a, 1, 1, Expansion::Column(2), Method::Auto).unwrap();
        assert_eq!(row, q(-1, 2));
        assert_eq!(col, q(-1, 2));
        assert_eq!(default_expansion(&a, 1, 1, true), Some(Expansion::Row(2)));
    }

    #[test]
    fn solve_and_cramer() {
        let a = int_matrix(2, &[1, 2, 3, 4]);
        let xi = vec![q(1, 1), q(0, 1)];
        assert_eq!(solve_system(&QRing, &a, &xi, Method::Auto).unwrap(), vec![q(-2, 1), q(3, 2)]);
        let (l, r) = cramer_check(&QRing, &a, &xi, 1, 1, Method::Auto).unwrap();
        assert_eq!((l.clone(), r), (q(1, 1), q(1, 1)));
    }

    #[test]
    fn sylvester_with_empty_pivot_is_plain() {
        let a = int_matrix(3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
        let plain = qdet(&QRing, &a, 1, 1, Method::Auto).unwrap();
        assert_eq!(sylvester_reduce(&QRing, &a, &[], 1, 1, Method::Auto).unwrap(), plain);
        assert_eq!(sylvester_reduce(&QRing, &a, &[2], 1, 3, Method::Auto).unwrap(), qdet(&QRing, &a, 1, 3, Method::Auto).unwrap());
    }

    #[test]
    fn heredity_with_trivial_partition() {
        let a = int_matrix(3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
        let v = heredity_qdet(&QRing, &a, &[1, 1, 1], &[1, 1, 1], (2, 3), (2, 3), Method::Auto).unwrap();
        assert_eq!(v, qdet(&QRing, &a, 2, 3, Method::Auto).unwrap());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_by_quasiminors(&QRing, &int_matrix(2, &[1, 2, 2, 4]), Method::Auto), 1);
        assert_eq!(rank_by_quasiminors(&QRing, &int_matrix(2, &[0, 0, 0, 0]), Method::Auto), 0);
        assert_eq!(rank_by_quasiminors(&QRing, &NcMatrix::identity(&QRing, 3), Method::Auto), 3);
    }

    #[test]
    fn formula_height_is_n_minus_one() {
        for n in 1..=4 {
            assert_eq!(qdet_formula(n, 1, 1).unwrap().height(), n - 1);
        }
    }

    #[test]
    fn cayley_hamilton_one_by_one() {
        let a = int_matrix(1, &[5]);
        let f = cayley_hamilton(&QRing, &a).unwrap();
        assert_eq!(f.at(0, 0), &vec![q(0, 1)]);
    }
}

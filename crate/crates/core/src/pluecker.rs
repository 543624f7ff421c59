//! Quasi-Plücker coordinates, Gauss decomposition and flag coordinates.
//!
//! Index arguments are 1-based column labels (left coordinates of a `k x n`
//! matrix) or row labels (right coordinates of an `n x k` matrix).

use crate::error::{Error, Result};
use crate::matrix::NcMatrix;
use crate::quasidet::{matrix_inverse, qdet, Method};
use crate::scalar::{MatRing, QMat, Ring};

/// Which row (left) or column (right) the bordered quasideterminants pivot on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Pivot {
    /// First index, ascending, at which both factors are defined.
    #[default]
    Auto,
    Fixed(usize),
}

fn positions(labels: &[usize], wanted: &[usize], axis: &'static str) -> Result<Vec<usize>> {
    wanted
        .iter()
        .map(|&w| labels.iter().position(|&l| l == w).ok_or(Error::UnknownIndex { axis, index: w }))
        .collect()
}

fn try_pivots<E>(k: usize, pivot: Pivot, mut f: impl FnMut(usize) -> Result<E>) -> Result<E> {
    match pivot {
        Pivot::Fixed(s) if s == 0 || s > k => Err(Error::invalid(format!("pivot {s} outside 1..={k}"))),
        Pivot::Fixed(s) => f(s),
        Pivot::Auto => {
            let mut last = Error::domain("no pivot");
            for s in 1..=k {
                match f(s) {
                    Ok(v) => return Ok(v),
                    Err(e) if e.is_domain() => last = e,
                    Err(e) => return Err(e),
                }
            }
            Err(last)
        }
    }
}

/// Left coordinate `p^I_ij(A) = |A_{(i,I)}|_{s i}^{-1} |A_{(j,I)}|_{s j}` of a
/// `k x n` matrix, where `A_{(c,I)}` has columns `c, i_1, .., i_{k-1}`.
/// `j` may lie in `I` (the value is then 0).
pub fn left_qpc<R: Ring>(
    ring: &R,
    a: &NcMatrix<R::Elem>,
    i: usize,
    j: usize,
    set: &[usize],
    pivot: Pivot,
    method: Method,
) -> Result<R::Elem> {
    let k = a.nrows();
    if set.len() + 1 != k {
        return Err(Error::invalid(format!("left coordinate of a {k}-row matrix needs |I| = {}", k - 1)));
    }
    if set.contains(&i) {
        return Err(Error::invalid(format!("i = {i} lies in I")));
    }
    let rows: Vec<usize> = (0..k).collect();
    let mut ci = vec![i];
    ci.extend_from_slice(set);
    let mut cj = vec![j];
    cj.extend_from_slice(set);
    let mi = a.select_positions(&rows, &positions(a.col_labels(), &ci, "column")?);
    let mj = a.select_positions(&rows, &positions(a.col_labels(), &cj, "column")?);
    try_pivots(k, pivot, |s| {
        let den = qdet(ring, &mi, s, 1, method)?;
        let inv = ring.try_inv(&den).ok_or_else(|| Error::domain(format!("|A_(i,I)|_{{{s},i}} is not invertible")))?;
        Ok(ring.mul(&inv, &qdet(ring, &mj, s, 1, method)?))
    })
}

/// Right coordinate `r^I_ij(B) = |B_{(i,I)}|_{i t} |B_{(j,I)}|_{j t}^{-1}` of
/// an `n x k` matrix, where `B_{(r,I)}` has rows `r, i_1, .., i_{k-1}`.
pub fn right_qpc<R: Ring>(
    ring: &R,
    b: &NcMatrix<R::Elem>,
    i: usize,
    j: usize,
    set: &[usize],
    pivot: Pivot,
    method: Method,
) -> Result<R::Elem> {
    let k = b.ncols();
    if set.len() + 1 != k {
        return Err(Error::invalid(format!("right coordinate of a {k}-column matrix needs |I| = {}", k - 1)));
    }
    if set.contains(&j) {
        return Err(Error::invalid(format!("j = {j} lies in I")));
    }
    let cols: Vec<usize> = (0..k).collect();
    let mut ri = vec![i];
    ri.extend_from_slice(set);
    let mut rj = vec![j];
    rj.extend_from_slice(set);
    let mi = b.select_positions(&positions(b.row_labels(), &ri, "row")?, &cols);
    let mj = b.select_positions(&positions(b.row_labels(), &rj, "row")?, &cols);
    try_pivots(k, pivot, |t| {
        let den = qdet(ring, &mj, 1, t, method)?;
        let inv = ring.try_inv(&den).ok_or_else(|| Error::domain(format!("|B_(j,I)|_{{j,{t}}} is not invertible")))?;
        Ok(ring.mul(&qdet(ring, &mi, 1, t, method)?, &inv))
    })
}

/// `[1, n]` without the given labels, ascending.
pub fn complement(n: usize, without: &[usize]) -> Vec<usize> {
    (1..=n).filter(|x| !without.contains(x)).collect()
}

/// `C = B^{-1} A` for the leading `k x k` block `B` of a `k x n` matrix,
/// together with `B`.
pub fn normal_form<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>) -> Result<(NcMatrix<R::Elem>, NcMatrix<R::Elem>)> {
    let k = a.nrows();
    if k > a.ncols() {
        return Err(Error::Shape("normal form needs k <= n".into()));
    }
    let lead: Vec<usize> = a.col_labels()[..k].to_vec();
    let b = a.select(a.row_labels(), &lead)?;
    let inv = matrix_inverse(ring, &b)?;
    let c = inv.mul(ring, a)?.relabeled(a.row_labels().to_vec(), a.col_labels().to_vec())?;
    Ok((c, b))
}

/// The matrix predicted for the normal form: `delta_ij` for `j <= k`,
/// `p^{1..î..k}_ij(A)` for `j > k`. Also `B^{-1} C` for `A = (B | C)`.
pub fn qpc_normal_form<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, method: Method) -> Result<NcMatrix<R::Elem>> {
    let (k, n) = (a.nrows(), a.ncols());
    let mut data = Vec::with_capacity(k * n);
    for i in 1..=k {
        for j in 1..=n {
            data.push(if j <= k {
                if i == j {
                    ring.one()
                } else {
                    ring.zero()
                }
            } else {
                left_qpc(ring, a, i, j, &complement(k, &[i]), Pivot::Auto, method)?
            });
        }
    }
    Ok(NcMatrix::from_rows(k, n, data))
}

/// A block matrix `B` (`n x (n-k)`) with `A B = 0`, built from a right
/// kernel of the flattened `A`. `None` when the kernel has the wrong
/// dimension.
pub fn kernel_complement(ring: &MatRing, a: &NcMatrix<QMat>) -> Option<NcMatrix<QMat>> {
    let (k, n, d) = (a.nrows(), a.ncols(), ring.dim());
    let ker = ring.flatten(a).right_kernel();
    if ker.len() != (n - k) * d {
        return None;
    }
    let m = n - k;
    let dense = crate::linalg::DenseQ::from_fn(n * d, m * d, |r, c| ker[c][r].clone());
    Some(ring.unflatten(&dense, (1..=n).collect(), (1..=m).collect()))
}

/// `p_{j beta} = p^{[n] - {j, beta}}_{j beta}(A without row alpha)`.
pub fn expansion_p<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, alpha: usize, j: usize, beta: usize, method: Method) -> Result<R::Elem> {
    let n = a.ncols();
    let b = a.delete_sets(&[alpha], &[])?.normalized();
    left_qpc(ring, &b, j, beta, &complement(n, &[j, beta]), Pivot::Auto, method)
}

/// `r_{alpha i} = r^{[n] - {alpha, i}}_{alpha i}(A without column beta)`.
pub fn expansion_r<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, beta: usize, alpha: usize, i: usize, method: Method) -> Result<R::Elem> {
    let n = a.nrows();
    let c = a.delete_sets(&[], &[beta])?.normalized();
    right_qpc(ring, &c, alpha, i, &complement(n, &[alpha, i]), Pivot::Auto, method)
}

/// `A = U Y L` with `U` upper and `L` lower unitriangular and `Y` diagonal:
/// `y_k = |A_k|_kk` for the trailing block `A_k` (rows and columns `k..n`),
/// `x_ab = r^{b+1..n}_ab(columns b..n)`, `z_ba = p^{b+1..n}_ba(rows b..n)`.
pub fn gauss_decompose<R: Ring>(
    ring: &R,
    a: &NcMatrix<R::Elem>,
    method: Method,
) -> Result<(NcMatrix<R::Elem>, NcMatrix<R::Elem>, NcMatrix<R::Elem>)> {
    if !a.is_square() {
        return Err(Error::Shape("Gauss decomposition of a non-square matrix".into()));
    }
    let a = a.normalized();
    let n = a.nrows();
    let mut y = Vec::with_capacity(n);
    for k in 1..=n {
        let tail: Vec<usize> = (k..=n).collect();
        let yk = qdet(ring, &a.select(&tail, &tail)?, k, k, method)?;
        if ring.try_inv(&yk).is_none() {
            return Err(Error::domain(format!("y_{k} is not invertible")));
        }
        y.push(yk);
    }
    let mut u = NcMatrix::identity(ring, n);
    let mut l = NcMatrix::identity(ring, n);
    for beta in 1..=n {
        let tail: Vec<usize> = (beta + 1..=n).collect();
        let cols: Vec<usize> = (beta..=n).collect();
        let b_beta = a.select(&(1..=n).collect::<Vec<_>>(), &cols)?.normalized();
        let c_beta = a.select(&cols, &(1..=n).collect::<Vec<_>>())?.normalized();
        for alpha in 1..beta {
            let x = right_qpc(ring, &b_beta, alpha, beta, &tail, Pivot::Auto, method)?;
            u = u.with_entry(alpha, beta, x)?;
            let z = left_qpc(ring, &c_beta, beta, alpha, &tail, Pivot::Auto, method)?;
            l = l.with_entry(beta, alpha, z)?;
        }
    }
    let ydiag = NcMatrix::from_fn(n, n, |r, c| if r == c { y[r].clone() } else { ring.zero() });
    Ok((u, ydiag, l))
}

/// `f_{j_1..j_m} = |A_{1..m; j_1..j_m}|_{m j_1}` for the flag spanned by the
/// leading rows.
pub fn flag_coordinate<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, cols: &[usize], method: Method) -> Result<R::Elem> {
    let m = cols.len();
    if m == 0 || m > a.nrows() {
        return Err(Error::invalid(format!("flag coordinate needs 1..={} columns", a.nrows())));
    }
    let rows: Vec<usize> = (0..m).collect();
    let sub = a.select_positions(&rows, &positions(a.col_labels(), cols, "column")?);
    qdet(ring, &sub, m, 1, method)
}

/// `X = [[A_{1..k}, A_{k+1..n}], [0, E_{n-k}]]` for a `k x n` matrix.
pub fn embed<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>) -> NcMatrix<R::Elem> {
    let (k, n) = (a.nrows(), a.ncols());
    NcMatrix::from_fn(n, n, |r, c| {
        if r < k {
            a.at(r, c).clone()
        } else if r == c {
            ring.one()
        } else {
            ring.zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DenseQ;
    use crate::scalar::QRing;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn int_matrix(n: usize, m: usize, v: &[i64]) -> NcMatrix<BigRational> {
        NcMatrix::from_rows(n, m, v.iter().map(|&x| q(x, 1)).collect())
    }

    fn minor(a: &NcMatrix<BigRational>, cols: &[usize]) -> BigRational {
        let s = a.select(a.row_labels(), cols).unwrap();
        DenseQ::from_vec(s.nrows(), s.ncols(), s.entries().to_vec()).det_bareiss()
    }

    #[test]
    fn one_row_coordinates() {
        let a = int_matrix(1, 3, &[2, 3, 5]);
        assert_eq!(left_qpc(&QRing, &a, 1, 3, &[], Pivot::Auto, Method::Auto).unwrap(), q(5, 2));
        let b = a.transpose();
        assert_eq!(right_qpc(&QRing, &b, 1, 3, &[], Pivot::Auto, Method::Auto).unwrap(), q(2, 5));
    }

    #[test]
    fn commutative_coordinates_are_minor_ratios() {
        let a = int_matrix(2, 4, &[1, 2, 0, 3, 4, -1, 2, 1]);
        for (i, j, l) in [(1, 3, 2), (2, 4, 1), (3, 1, 4)] {
            let p = left_qpc(&QRing, &a, i, j, &[l], Pivot::Auto, Method::Auto).unwrap();
            assert_eq!(p, minor(&a, &[j, l]) / minor(&a, &[i, l]));
        }
        assert_eq!(left_qpc(&QRing, &a, 1, 1, &[2], Pivot::Fixed(2), Method::Auto).unwrap(), q(1, 1));
        assert_eq!(left_qpc(&QRing, &a, 1, 2, &[2], Pivot::Auto, Method::Auto).unwrap(), q(0, 1));
    }

    #[test]
    fn normal_form_of_identity_block() {
        let a = int_matrix(2, 3, &[1, 0, 7, 0, 1, -2]);
        let (c, b) = normal_form(&QRing, &a).unwrap();
        assert_eq!(c, a);
        assert!(b.is_identity(&QRing));
        assert_eq!(qpc_normal_form(&QRing, &a, Method::Auto).unwrap(), a);
    }

    #[test]
    fn gauss_of_diagonal() {
        let a = int_matrix(3, 3, &[2, 0, 0, 0, 3, 0, 0, 0, 5]);
        let (u, y, l) = gauss_decompose(&QRing, &a, Method::Auto).unwrap();
        assert!(u.is_identity(&QRing) && l.is_identity(&QRing));
        assert_eq!(y, a);
    }

    #[test]
    fn gauss_reassembles() {
        let a = int_matrix(3, 3, &[2, 1, 3, 1, 4, 1, 5, 2, 6]);
        let (u, y, l) = gauss_decompose(&QRing, &a, Method::Auto).unwrap();
        assert_eq!(u.mul(&QRing, &y).unwrap().mul(&QRing, &l).unwrap(), a);
    }

    #[test]
    fn flag_of_one_row() {
        let a = int_matrix(2, 3, &[4, 5, 6, 1, 2, 3]);
        assert_eq!(flag_coordinate(&QRing, &a, &[2], Method::Auto).unwrap(), q(5, 1));
    }

    #[test]
    fn kernel_complement_annihilates() {
        let ring = MatRing::new(2);
        let vals = [[1, 2, 0, 1], [3, -1, 2, 2], [0, 1, 1, 0], [2, 2, -1, 3], [1, 0, 4, 1], [-2, 1, 1, 1], [5, 1, 0, 2], [1, 1, 1, -1]];
        let a = NcMatrix::from_rows(2, 4, vals.iter().map(|v| QMat::from_i64(2, v)).collect());
        let b = kernel_complement(&ring, &a).unwrap();
        assert_eq!((b.nrows(), b.ncols()), (4, 2));
        assert!(a.mul(&ring, &b).unwrap().is_zero(&ring));
    }
}

//! Almost-triangular matrices: continued fractions, convergents and the
//! determinant-like products `D(1..n)`.
//!
//! `A_n` below is upper Hessenberg with `-1` on the subdiagonal; entries are
//! addressed 1-based as `a(i, j)`.

use crate::error::{Error, Result};
use crate::matrix::NcMatrix;
use crate::quasidet::{qdet, Method};
use crate::scalar::{QFrac, QPoly, QSeriesRing, Ring};

fn inv<R: Ring>(ring: &R, x: &R::Elem, what: &str) -> Result<R::Elem> {
    ring.try_inv(x).ok_or_else(|| Error::domain(format!("{what} is not invertible")))
}

/// `A_n` from its upper part: `upper(i, j)` for `i <= j`, `-1` on the
/// subdiagonal, zero below.
pub fn hessenberg<R: Ring>(ring: &R, n: usize, upper: impl Fn(usize, usize) -> R::Elem) -> NcMatrix<R::Elem> {
    NcMatrix::from_fn(n, n, |r, c| {
        if c >= r {
            upper(r + 1, c + 1)
        } else if r == c + 1 {
            ring.from_int(-1)
        } else {
            ring.zero()
        }
    })
}

/// `|A_n|_{11}` by the nested fraction
/// `T_n = a_nn`, `T_r = a_rr + sum_{j>r} a_rj T_j^{-1} .. T_{r+1}^{-1}`.
pub fn nested_fraction<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>) -> Result<R::Elem> {
    let n = a.nrows();
    let mut t_inv: Vec<Option<R::Elem>> = vec![None; n + 2];
    let mut t1 = ring.zero();
    for r in (1..=n).rev() {
        let mut t = a.at(r - 1, r - 1).clone();
        let mut chain = ring.one();
        for j in r + 1..=n {
            chain = ring.mul(t_inv[j].as_ref().expect("filled"), &chain);
            t = ring.add(&t, &ring.mul(a.at(r - 1, j - 1), &chain));
        }
        if r == 1 {
            t1 = t;
        } else {
            t_inv[r] = Some(inv(ring, &t, &format!("T_{r}"))?);
        }
    }
    Ok(t1)
}

/// Sum over increasing chains `j_1 < .. < j_k` in `lo..=hi` of
/// `a(start, j_1) a(j_1+1, j_2) .. a(j_k+1, end)`.
fn chain_sum<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, start: usize, lo: usize, hi: usize, end: usize) -> R::Elem {
    let pool: Vec<usize> = if lo <= hi { (lo..=hi).collect() } else { Vec::new() };
    let mut total = ring.zero();
    for mask in 0u64..1 << pool.len() {
        let js: Vec<usize> = pool.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &j)| j).collect();
        let mut row = start;
        let mut term = ring.one();
        for &j in js.iter().chain(std::iter::once(&end)) {
            term = ring.mul(&term, a.at(row - 1, j - 1));
            row = j + 1;
        }
        total = ring.add(&total, &term);
    }
    total
}

/// `(P_n, Q_n)` by the explicit monomial sums; `Q_1 = 1`.
pub fn convergents_explicit<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>) -> (R::Elem, R::Elem) {
    let n = a.nrows();
    let p = chain_sum(ring, a, 1, 1, n - 1, n);
    let q = if n == 1 { ring.one() } else { chain_sum(ring, a, 2, 2, n - 1, n) };
    (p, q)
}

/// `P_0..P_n` and `Q_1..Q_n` (index 0 of the `Q` list is unused and zero)
/// by `P_k = sum_{s<k} P_s a(s+1, k)`, `Q_k = sum_{1<=s<k} Q_s a(s+1, k)`.
pub fn convergents_recurrence<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>) -> (Vec<R::Elem>, Vec<R::Elem>) {
    let n = a.nrows();
    let mut p = vec![ring.one()];
    let mut q = vec![ring.zero(), ring.one()];
    for k in 1..=n {
        let pk = (0..k).fold(ring.zero(), |acc, s| ring.add(&acc, &ring.mul(&p[s], a.at(s, k - 1))));
        p.push(pk);
        if k >= 2 {
            let qk = (1..k).fold(ring.zero(), |acc, s| ring.add(&acc, &ring.mul(&q[s], a.at(s, k - 1))));
            q.push(qk);
        }
    }
    (p, q)
}

/// The Jacobi matrix: `a_i` on the diagonal, `1` above, `-1` below.
pub fn jacobi_matrix<R: Ring>(ring: &R, a: &[R::Elem]) -> NcMatrix<R::Elem> {
    hessenberg(ring, a.len(), |i, j| {
        if i == j {
            a[i - 1].clone()
        } else if j == i + 1 {
            ring.one()
        } else {
            ring.zero()
        }
    })
}

/// `P_0..P_n` and `Q_1..Q_n` of a Jacobi matrix by the three-term
/// recurrences `P_k = P_{k-1} a_k + P_{k-2}`, `Q_k = Q_{k-1} a_k + Q_{k-2}`.
pub fn jacobi_convergents<R: Ring>(ring: &R, a: &[R::Elem]) -> (Vec<R::Elem>, Vec<R::Elem>) {
    let n = a.len();
    let mut p = vec![ring.one()];
    if n >= 1 {
        p.push(a[0].clone());
    }
    for k in 2..=n {
        p.push(ring.add(&ring.mul(&p[k - 1], &a[k - 1]), &p[k - 2]));
    }
    let mut q = vec![ring.zero(), ring.one()];
    if n >= 2 {
        q.push(a[1].clone());
    }
    for k in 3..=n {
        q.push(ring.add(&ring.mul(&q[k - 1], &a[k - 1]), &q[k - 2]));
    }
    q.truncate(n.max(1) + 1);
    (p, q)
}

/// Truncations of the two formal series whose ratio is `|A|_{11}`:
/// `P = sum_r sum_{j_1<..<j_k<r-1} a(1,j_1) .. a(j_k+1,r) a_rr^{-1} .. a_11^{-1}`
/// over `r = 1..=max_r`, and `Q` the same from row 2 with `r >= 2`.
pub fn series_convergents<R: Ring>(ring: &R, a: &NcMatrix<R::Elem>, max_r: usize) -> Result<(R::Elem, R::Elem)> {
    let max_r = max_r.min(a.nrows());
    let mut tail = Vec::with_capacity(max_r + 1);
    tail.push(ring.one());
    for r in 1..=max_r {
        let di = inv(ring, a.at(r - 1, r - 1), &format!("a_{r}{r}"))?;
        let prev = tail[r - 1].clone();
        tail.push(ring.mul(&di, &prev));
    }
    let mut p = ring.zero();
    let mut q = ring.zero();
    for r in 1..=max_r {
        let lo_hi = r.saturating_sub(2);
        p = ring.add(&p, &ring.mul(&chain_sum(ring, a, 1, 1, lo_hi, r), &tail[r]));
        if r >= 2 {
            q = ring.add(&q, &ring.mul(&chain_sum(ring, a, 2, 2, lo_hi, r), &tail[r]));
        }
    }
    Ok((p, q))
}

/// Heisenberg-type scalars realizing the Berenstein hypotheses: for `i < j`,
/// `a_ij = a_jj a_ii - a_ii a_jj`.
pub fn berenstein_matrix<R: Ring>(ring: &R, diag: &[R::Elem]) -> NcMatrix<R::Elem> {
    hessenberg(ring, diag.len(), |i, j| {
        if i == j {
            diag[i - 1].clone()
        } else {
            ring.sub(&ring.mul(&diag[j - 1], &diag[i - 1]), &ring.mul(&diag[i - 1], &diag[j - 1]))
        }
    })
}

/// `D(1..n) = |B|_11 b_21^{-1} |B_1|_22 b_32^{-1} .. b_{n,n-1}^{-1} a_nn` for an
/// almost triangular `B`; `D` of the empty matrix is 1.
pub fn almost_triangular_d<R: Ring>(ring: &R, b: &NcMatrix<R::Elem>, method: Method) -> Result<R::Elem> {
    let n = b.nrows();
    let mut acc = ring.one();
    for k in 0..n {
        let tail: Vec<usize> = (k..n).collect();
        let sub = b.select_positions(&tail, &tail);
        acc = ring.mul(&acc, &qdet(ring, &sub, 1, 1, method)?);
        if k + 1 < n {
            acc = ring.mul(&acc, &inv(ring, b.at(k + 1, k), &format!("b_{}{}", k + 2, k + 1))?);
        }
    }
    Ok(acc)
}

/// `D` of the principal submatrix on rows and columns `from..=to`.
pub fn d_range<R: Ring>(ring: &R, b: &NcMatrix<R::Elem>, from: usize, to: usize, method: Method) -> Result<R::Elem> {
    if from > to {
        return Ok(ring.one());
    }
    let pos: Vec<usize> = (from - 1..to).collect();
    almost_triangular_d(ring, &b.select_positions(&pos, &pos), method)
}

/// `sum_{j_1 < .. < j_k < n} (-1)^k a_{1 j_1} b^{-1}_{j_1+1, j_1} a_{j_1+1, j_2} .. a_{j_k+1, n}`.
pub fn almost_triangular_sum<R: Ring>(ring: &R, b: &NcMatrix<R::Elem>) -> Result<R::Elem> {
    let n = b.nrows();
    let mut total = ring.zero();
    for mask in 0u64..1 << (n - 1) {
        let js: Vec<usize> = (1..n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let mut row = 1;
        let mut term = ring.one();
        for &j in &js {
            term = ring.mul(&term, b.at(row - 1, j - 1));
            term = ring.mul(&term, &inv(ring, b.at(j, j - 1), "subdiagonal entry")?);
            row = j + 1;
        }
        term = ring.mul(&term, b.at(row - 1, n - 1));
        total = if js.len() % 2 == 0 { ring.add(&total, &term) } else { ring.sub(&total, &term) };
    }
    Ok(total)
}

/// `(-1)^{i+j} D(1..i-1)^{-1} D(1..n) D(j+1..n)^{-1}` for `i <= j`, for an
/// almost triangular matrix with unit subdiagonal.
pub fn unit_subdiagonal_qdet<R: Ring>(ring: &R, b: &NcMatrix<R::Elem>, i: usize, j: usize, method: Method) -> Result<R::Elem> {
    let n = b.nrows();
    let left = inv(ring, &d_range(ring, b, 1, i - 1, method)?, "D(1..i-1)")?;
    let right = inv(ring, &d_range(ring, b, j + 1, n, method)?, "D(j+1..n)")?;
    let v = ring.mul(&ring.mul(&left, &d_range(ring, b, 1, n, method)?), &right);
    Ok(if (i + j) % 2 == 0 { v } else { ring.neg(&v) })
}

/// `|B|_ij` for `i <= j` and a general invertible subdiagonal: scale column
/// `c < n` on the right by `b_{c+1,c}^{-1}`, apply the unit-subdiagonal form
/// and undo the scaling of column `j`.
pub fn almost_triangular_qdet<R: Ring>(ring: &R, b: &NcMatrix<R::Elem>, i: usize, j: usize, method: Method) -> Result<R::Elem> {
    let n = b.nrows();
    let mut mu = Vec::with_capacity(n);
    for c in 0..n {
        mu.push(if c + 1 < n { inv(ring, b.at(c + 1, c), "subdiagonal entry")? } else { ring.one() });
    }
    let scaled = NcMatrix::from_fn(n, n, |r, c| ring.mul(b.at(r, c), &mu[c]));
    let v = unit_subdiagonal_qdet(ring, &scaled, i, j, method)?;
    Ok(if j < n { ring.mul(&v, b.at(j, j - 1)) } else { v })
}

/// `prod_{i=1..k} (1 - q^i)`.
fn q_pochhammer(k: usize) -> QPoly {
    (1..=k).fold(QPoly::one(), |acc, i| acc.mul(&QPoly::one().sub(&QPoly::q_pow(i))))
}

/// `1 / (1 + q z / (1 + q^2 z / (.. / (1 + q^depth z))))` as a series in `z`.
pub fn rogers_ramanujan_fraction(ring: &QSeriesRing, depth: usize) -> Result<Vec<QFrac>> {
    let mut t = ring.one();
    for k in (1..=depth).rev() {
        let term = ring.monomial(QFrac::from_poly(QPoly::q_pow(k)), 1);
        let ti = inv(ring, &t, "continued fraction tail")?;
        t = ring.add(&ring.one(), &ring.mul(&term, &ti));
    }
    inv(ring, &t, "continued fraction")
}

/// The same fraction from the convergent recurrences of the Hessenberg
/// matrix with unit diagonal and `q^k z` above it: `Q_D P_D^{-1}`.
pub fn rogers_ramanujan_by_convergents(ring: &QSeriesRing, depth: usize) -> Result<Vec<QFrac>> {
    let n = depth + 1;
    let a = hessenberg(ring, n, |i, j| {
        if i == j {
            ring.one()
        } else if j == i + 1 {
            ring.monomial(QFrac::from_poly(QPoly::q_pow(i)), 1)
        } else {
            ring.zero()
        }
    });
    let (p, q) = convergents_recurrence(ring, &a);
    Ok(ring.mul(&q[n], &inv(ring, &p[n], "P_D")?))
}

/// `(1 + sum q^{k(k+1)} z^k / (q;q)_k) / (1 + sum q^{k^2} z^k / (q;q)_k)`.
pub fn rogers_ramanujan_ratio(ring: &QSeriesRing) -> Result<Vec<QFrac>> {
    let n = ring.order();
    let side = |shift: bool| -> Vec<QFrac> {
        (0..=n)
            .map(|k| {
                let e = if shift { k * (k + 1) } else { k * k };
                QFrac::new(QPoly::q_pow(e), q_pochhammer(k)).expect("(q;q)_k is nonzero")
            })
            .collect()
    };
    let num = side(true);
    let den = side(false);
    Ok(ring.mul(&num, &inv(ring, &den, "denominator series")?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QRing;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn sample3() -> NcMatrix<BigRational> {
        hessenberg(&QRing, 3, |i, j| q((i * 3 + j) as i64))
    }

    #[test]
    fn two_by_two_fraction() {
        let a = hessenberg(&QRing, 2, |i, j| q([[2, 3], [0, 5]][i - 1][j - 1]));
        let want = q(2) + q(3) / q(5);
        assert_eq!(qdet(&QRing, &a, 1, 1, Method::Auto).unwrap(), want);
        assert_eq!(nested_fraction(&QRing, &a).unwrap(), want);
        let (p, qq) = convergents_explicit(&QRing, &a);
        assert_eq!(p / qq, want);
    }

    #[test]
    fn recurrences_match_sums() {
        let a = sample3();
        let (p, qs) = convergents_recurrence(&QRing, &a);
        assert_eq!(p[0], q(1));
        assert_eq!(p[1], q(4));
        let (pe, qe) = convergents_explicit(&QRing, &a);
        assert_eq!((p[3].clone(), qs[3].clone()), (pe, qe));
        assert_eq!(nested_fraction(&QRing, &a).unwrap(), qdet(&QRing, &a, 1, 1, Method::Auto).unwrap());
    }

    #[test]
    fn jacobi_recurrences() {
        let a = [q(2), q(3), q(5), q(7)];
        let (p, qs) = jacobi_convergents(&QRing, &a);
        assert_eq!(p[2], q(7));
        assert_eq!(qs[2], q(3));
        let (pr, qr) = convergents_recurrence(&QRing, &jacobi_matrix(&QRing, &a));
        assert_eq!((p, qs), (pr, qr));
    }

    #[test]
    fn almost_triangular_small() {
        let b = NcMatrix::from_rows(2, 2, vec![q(2), q(3), q(5), q(7)]);
        let d = almost_triangular_d(&QRing, &b, Method::Auto).unwrap();
        assert_eq!(-d.clone(), qdet(&QRing, &b, 1, 2, Method::Auto).unwrap());
        assert_eq!(almost_triangular_sum(&QRing, &b).unwrap(), qdet(&QRing, &b, 1, 2, Method::Auto).unwrap());
        for (i, j) in [(1, 1), (1, 2), (2, 2)] {
            assert_eq!(
                almost_triangular_qdet(&QRing, &b, i, j, Method::Auto).unwrap(),
                qdet(&QRing, &b, i, j, Method::Auto).unwrap()
            );
        }
    }

    #[test]
    fn rogers_ramanujan_low_order() {
        let ring = QSeriesRing::new(3);
        let lhs = rogers_ramanujan_fraction(&ring, 6).unwrap();
        assert_eq!(lhs[1].to_string(), "-q");
        assert_eq!(lhs, rogers_ramanujan_ratio(&ring).unwrap());
        assert_eq!(lhs, rogers_ramanujan_by_convergents(&ring, 6).unwrap());
    }
}

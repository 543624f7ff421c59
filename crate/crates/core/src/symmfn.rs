//! Vandermonde quasideterminants, Bezout and Vieta decompositions and
//! noncommutative symmetric functions.

use crate::error::{Error, Result};
use crate::matrix::NcMatrix;
use crate::quasidet::{qdet, Method};
use crate::scalar::{Ring, TruncRing};

/// Polynomial `c_0 z^n + c_1 z^{n-1} + .. + c_n` with left coefficients in a
/// ring and a central variable.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralPoly<E> {
    pub coeffs: Vec<E>,
}

impl<E: Clone> CentralPoly<E> {
    /// The monic polynomial `z^n + a_1 z^{n-1} + .. + a_n`.
    pub fn monic<R: Ring<Elem = E>>(ring: &R, a: &[E]) -> Self {
        let mut coeffs = vec![ring.one()];
        coeffs.extend_from_slice(a);
        CentralPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `sum_k c_k w^{n-k}`, Horner from the right so the powers of `w` stay
    /// on the right of each coefficient.
    pub fn eval<R: Ring<Elem = E>>(&self, ring: &R, w: &E) -> E {
        let n = self.degree();
        let mut power = ring.one();
        let mut acc = ring.zero();
        for k in (0..=n).rev() {
            acc = ring.add(&acc, &ring.mul(&self.coeffs[k], &power));
            power = ring.mul(&power, w);
        }
        acc
    }
}

/// Matrix with rows `x^{e}` for the given exponents (top to bottom) and one
/// column per point.
fn power_matrix<R: Ring>(ring: &R, xs: &[R::Elem], exponents: &[u32]) -> NcMatrix<R::Elem> {
    NcMatrix::from_fn(exponents.len(), xs.len(), |r, c| ring.pow(&xs[c], exponents[r]))
}

/// `V(x_1, .., x_k)`: the `(1, k)` quasideterminant of the matrix with rows
/// `x^{k-1}, .., x, 1`.
pub fn vandermonde<R: Ring>(ring: &R, xs: &[R::Elem], method: Method) -> Result<R::Elem> {
    let k = xs.len();
    if k < 2 {
        return Err(Error::invalid("a Vandermonde quasideterminant needs at least two points"));
    }
    let exps: Vec<u32> = (0..k as u32).rev().collect();
    qdet(ring, &power_matrix(ring, xs, &exps), 1, k, method)
}

fn invertible<R: Ring>(ring: &R, v: &R::Elem, what: &str) -> Result<R::Elem> {
    ring.try_inv(v).ok_or_else(|| Error::domain(format!("{what} is not invertible")))
}

/// `V x V^{-1}` with `V = V(points)`.
fn conjugate_by_vandermonde<R: Ring>(ring: &R, points: &[R::Elem], x: &R::Elem, method: Method) -> Result<R::Elem> {
    let v = vandermonde(ring, points, method)?;
    let vi = invertible(ring, &v, "V")?;
    Ok(ring.mul(&ring.mul(&v, x), &vi))
}

/// Whether `V(x_1..x_k)` is defined and invertible for `k = 2..n`.
pub fn is_independent<R: Ring>(ring: &R, xs: &[R::Elem], method: Method) -> bool {
    (2..=xs.len()).all(|k| vandermonde(ring, &xs[..k], method).is_ok_and(|v| ring.try_inv(&v).is_some()))
}

/// `y_1 = x_1`, `y_k = V(x_1..x_k) x_k V(x_1..x_k)^{-1}`.
pub fn y_transform<R: Ring>(ring: &R, xs: &[R::Elem], method: Method) -> Result<Vec<R::Elem>> {
    let mut ys = Vec::with_capacity(xs.len());
    for k in 1..=xs.len() {
        ys.push(if k == 1 { xs[0].clone() } else { conjugate_by_vandermonde(ring, &xs[..k], &xs[k - 1], method)? });
    }
    Ok(ys)
}

/// `z_1 = z`, `z_k = V(x_1..x_{k-1}, z) z V(x_1..x_{k-1}, z)^{-1}`.
pub fn z_transform<R: Ring>(ring: &R, xs: &[R::Elem], z: &R::Elem, method: Method) -> Result<Vec<R::Elem>> {
    let mut zs = Vec::with_capacity(xs.len());
    for k in 1..=xs.len() {
        if k == 1 {
            zs.push(z.clone());
        } else {
            let mut pts = xs[..k - 1].to_vec();
            pts.push(z.clone());
            zs.push(conjugate_by_vandermonde(ring, &pts, z, method)?);
        }
    }
    Ok(zs)
}

/// `(x̂_2, .., x̂_n, ẑ)` with `x̂ = (x - x_1) x (x - x_1)^{-1}`.
pub fn hat_transform<R: Ring>(ring: &R, xs: &[R::Elem], z: &R::Elem) -> Result<(Vec<R::Elem>, R::Elem)> {
    let hat = |x: &R::Elem| -> Result<R::Elem> {
        let d = ring.sub(x, &xs[0]);
        let di = invertible(ring, &d, "x - x_1")?;
        Ok(ring.mul(&ring.mul(&d, x), &di))
    };
    let xh = xs[1..].iter().map(hat).collect::<Result<Vec<_>>>()?;
    Ok((xh, hat(z)?))
}

/// `(z_n - y_n) .. (z_1 - y_1)`.
pub fn bezout_product<R: Ring>(ring: &R, xs: &[R::Elem], z: &R::Elem, method: Method) -> Result<R::Elem> {
    let ys = y_transform(ring, xs, method)?;
    let zs = z_transform(ring, xs, z, method)?;
    Ok((0..xs.len()).rev().fold(ring.one(), |acc, k| ring.mul(&acc, &ring.sub(&zs[k], &ys[k]))))
}

/// Strictly increasing index tuples of length `k` from `0..n`.
fn increasing(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::quasidet::subsets(&(0..n).collect::<Vec<_>>(), k)
}

/// `sum_{i_1 < .. < i_k} y_{i_k} .. y_{i_1}`.
fn decreasing_words<R: Ring>(ring: &R, ys: &[R::Elem], k: usize) -> R::Elem {
    let terms: Vec<R::Elem> =
        increasing(ys.len(), k).iter().map(|idx| ring.product(idx.iter().rev().map(|&i| &ys[i]))).collect();
    ring.sum(terms.iter())
}

/// Coefficients `a_1..a_n` from the y-variables:
/// `a_k = (-1)^k sum_{i_1 < .. < i_k} y_{i_k} .. y_{i_1}`.
pub fn vieta_coeffs_from_y<R: Ring>(ring: &R, ys: &[R::Elem]) -> Vec<R::Elem> {
    (1..=ys.len())
        .map(|k| {
            let s = decreasing_words(ring, ys, k);
            if k % 2 == 1 {
                ring.neg(&s)
            } else {
                s
            }
        })
        .collect()
}

/// Coefficients as a ratio of two bordered Vandermonde quasideterminants:
/// `a_k = -|rows x^n, .., x^{n-k+1}, x^{n-k-1}, .., 1|_{1n}
///        |rows x^{n-1}, .., 1|^{-1}_{kn}`.
pub fn vieta_coeffs_via_qdet<R: Ring>(ring: &R, xs: &[R::Elem], method: Method) -> Result<Vec<R::Elem>> {
    let n = xs.len();
    let base: Vec<u32> = (0..n as u32).rev().collect();
    let m2 = power_matrix(ring, xs, &base);
    (1..=n)
        .map(|k| {
            let exps: Vec<u32> = (0..=n as u32).rev().filter(|&e| e as usize != n - k).collect();
            let num = qdet(ring, &power_matrix(ring, xs, &exps), 1, n, method)?;
            let den = qdet(ring, &m2, k, n, method)?;
            let di = invertible(ring, &den, "the bordered Vandermonde quasideterminant")?;
            Ok(ring.neg(&ring.mul(&num, &di)))
        })
        .collect()
}

/// Coefficients of the monic polynomial with roots `xs`, from the right
/// linear system `sum_k a_k x_i^{n-k} = -x_i^n` solved by quasideterminants:
/// `a_j = -sum_i x_i^n |W|^{-1}_{ji}` with `W_{ki} = x_i^{n-k}`.
pub fn coeffs_from_roots<R: Ring>(ring: &R, xs: &[R::Elem], method: Method) -> Result<Vec<R::Elem>> {
    let n = xs.len();
    let base: Vec<u32> = (0..n as u32).rev().collect();
    let w = power_matrix(ring, xs, &base);
    (1..=n)
        .map(|j| {
            let mut acc = ring.zero();
            for i in 1..=n {
                let q = qdet(ring, &w, j, i, method)?;
                let qi = invertible(ring, &q, "|W|_ji")?;
                acc = ring.add(&acc, &ring.mul(&ring.pow(&xs[i - 1], n as u32), &qi));
            }
            Ok(ring.neg(&acc))
        })
        .collect()
}

/// `Lambda_k = sum_{i_1 < .. < i_k} y_{i_k} .. y_{i_1}` for `k = 1..n`.
pub fn elementary_lambda<R: Ring>(ring: &R, ys: &[R::Elem]) -> Vec<R::Elem> {
    (1..=ys.len()).map(|k| decreasing_words(ring, ys, k)).collect()
}

/// `S_1..S_m` from `1 + sum S_i t^i = lambda(-t)^{-1}`, computed by inverting
/// the truncated series with `t` central.
pub fn complete_by_series<R: Ring>(ring: &R, ys: &[R::Elem], m: usize) -> Result<Vec<R::Elem>> {
    let series = TruncRing::new(ring.clone(), m);
    let lambda = elementary_lambda(ring, ys);
    let mut coeffs = vec![ring.zero(); m + 1];
    coeffs[0] = ring.one();
    for (k, l) in lambda.iter().enumerate().take(m) {
        let deg = k + 1;
        coeffs[deg] = if deg % 2 == 1 { ring.neg(l) } else { l.clone() };
    }
    let inv = series.try_inv(&coeffs).ok_or_else(|| Error::domain("lambda(-t) is not invertible"))?;
    Ok(inv[1..].to_vec())
}

/// All words of length `m` over `0..n`, lexicographic.
fn words(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n).map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// Positions `m` (1-based) with `w_m > w_{m+1}`.
pub fn descents(w: &[usize]) -> Vec<usize> {
    (1..w.len()).filter(|&m| w[m - 1] > w[m]).collect()
}

fn word_sum<R: Ring>(ring: &R, ys: &[R::Elem], m: usize, keep: impl Fn(&[usize]) -> bool) -> R::Elem {
    let terms: Vec<R::Elem> =
        words(ys.len(), m).iter().filter(|w| keep(w)).map(|w| ring.product(w.iter().map(|&i| &ys[i]))).collect();
    ring.sum(terms.iter())
}

/// `S_k = sum_{i_1 <= .. <= i_k} y_{i_1} .. y_{i_k}` for `k = 1..m`.
pub fn complete_by_words<R: Ring>(ring: &R, ys: &[R::Elem], m: usize) -> Vec<R::Elem> {
    (1..=m).map(|k| word_sum(ring, ys, k, |w| descents(w).is_empty())).collect()
}

/// Descent set `{j_1, j_1 + j_2, ..}` of a composition.
pub fn composition_descents(j: &[usize]) -> Vec<usize> {
    j.iter()
        .take(j.len().saturating_sub(1))
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// Ribbon Schur function: the sum of words of degree `|J|` whose descent set
/// is exactly that of `J`.
pub fn ribbon_schur<R: Ring>(ring: &R, ys: &[R::Elem], j: &[usize]) -> Result<R::Elem> {
    if j.is_empty() || j.contains(&0) {
        return Err(Error::invalid("a composition has positive parts"));
    }
    let target = composition_descents(j);
    Ok(word_sum(ring, ys, j.iter().sum(), |w| descents(w) == target))
}

/// Compositions of `m`, ordered by their descent sets read as binary numbers.
pub fn compositions(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return Vec::new();
    }
    (0..1usize << (m - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut len = 1;
            for bit in 0..m - 1 {
                if mask >> bit & 1 == 1 {
                    parts.push(len);
                    len = 1;
                } else {
                    len += 1;
                }
            }
            parts.push(len);
            parts
        })
        .collect()
}

/// `Lambda_{i_1} .. Lambda_{i_r}` for a composition `(i_1, .., i_r)`.
pub fn lambda_monomial<R: Ring>(ring: &R, ys: &[R::Elem], parts: &[usize]) -> R::Elem {
    ring.product(parts.iter().map(|&p| decreasing_words(ring, ys, p)).collect::<Vec<_>>().iter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{MatRing, QMat, QRing};
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn two_point_vandermonde() {
        let v = vandermonde(&QRing, &[q(3), q(7)], Method::Auto).unwrap();
        assert_eq!(v, q(4));
    }

    #[test]
    fn commutative_vandermonde_is_an_alternant_ratio() {
        let v = vandermonde(&QRing, &[q(1), q(2), q(4)], Method::Auto).unwrap();
        assert_eq!(v, q((4 - 1) * (4 - 2)));
    }

    #[test]
    fn vieta_one_two() {
        let xs = [q(1), q(2)];
        let ys = y_transform(&QRing, &xs, Method::Auto).unwrap();
        assert_eq!(ys, xs.to_vec());
        assert_eq!(vieta_coeffs_from_y(&QRing, &ys), vec![q(-3), q(2)]);
        assert_eq!(vieta_coeffs_via_qdet(&QRing, &xs, Method::Auto).unwrap(), vec![q(-3), q(2)]);
        assert_eq!(coeffs_from_roots(&QRing, &xs, Method::Auto).unwrap(), vec![q(-3), q(2)]);
        assert_eq!(elementary_lambda(&QRing, &ys), vec![q(3), q(2)]);
        assert_eq!(complete_by_words(&QRing, &ys, 2)[1], q(7));
        assert_eq!(complete_by_series(&QRing, &ys, 2).unwrap()[1], q(7));
    }

    #[test]
    fn central_poly_keeps_coefficients_left() {
        let ring = MatRing::new(2);
        let a = QMat::from_i64(2, &[0, 1, 0, 0]);
        let w = QMat::from_i64(2, &[1, 0, 1, 1]);
        let p = CentralPoly { coeffs: vec![a.clone(), ring.zero()] };
        assert_eq!(p.eval(&ring, &w), ring.mul(&a, &w));
    }

    #[test]
    fn ribbons_of_small_compositions() {
        let ys = [q(1), q(2)];
        assert_eq!(ribbon_schur(&QRing, &ys, &[2]).unwrap(), complete_by_words(&QRing, &ys, 2)[1]);
        assert_eq!(ribbon_schur(&QRing, &ys, &[1, 1]).unwrap(), elementary_lambda(&QRing, &ys)[1]);
        // words 121 and 221
        assert_eq!(ribbon_schur(&QRing, &ys, &[2, 1]).unwrap(), q(6));
        assert_eq!(compositions(3), vec![vec![3], vec![1, 2], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(composition_descents(&[2, 1, 3]), vec![2, 3]);
    }
}

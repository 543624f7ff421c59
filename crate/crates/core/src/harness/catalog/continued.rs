//! Continued fractions, formal series and almost triangular matrices.

use num_rational::BigRational;
use num_traits::Zero;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::contfrac::{
    almost_triangular_d, almost_triangular_qdet, almost_triangular_sum, berenstein_matrix, convergents_explicit,
    convergents_recurrence, d_range, hessenberg, jacobi_convergents, jacobi_matrix, nested_fraction,
    rogers_ramanujan_by_convergents, rogers_ramanujan_fraction, rogers_ramanujan_ratio, series_convergents,
    unit_subdiagonal_qdet,
};
use crate::scalar::{QSeriesRing, TruncRing};

const MODULE: &str = "contfrac";

/// Series order, matrix size and summation bound for the formal-series check.
const SERIES_ORDER: usize = 6;
const SERIES_SIZE: usize = 8;
const SERIES_MAX_R: usize = 7;

const RR_ORDER: usize = 6;
const RR_DEPTH: usize = 10;

fn sample_upper(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
    super::super::point_with_matrix(ctx, rng, ctx.n, ctx.n)
}

/// `A_n` built from the upper part of the sampled `A`.
fn hessenberg_from(ctx: &Ctx, pt: &Assignment) -> Result<(MatRing, NcMatrix<QMat>)> {
    let (r, m) = (ctx.ring(), mat(ctx, pt, "A")?);
    let a = hessenberg(&r, m.nrows(), |i, j| m.e(i, j).clone());
    Ok((r, a))
}

/// Almost triangular `B`: the sampled `A` with zeros below the subdiagonal,
/// and a unit subdiagonal when `unit`.
pub(super) fn almost_triangular(ctx: &Ctx, pt: &Assignment, unit: bool) -> Result<(MatRing, NcMatrix<QMat>)> {
    let (r, m) = (ctx.ring(), mat(ctx, pt, "A")?);
    let b = NcMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
        if i > j + 1 {
            r.zero()
        } else if i == j + 1 && unit {
            r.one()
        } else {
            m.at(i, j).clone()
        }
    });
    Ok((r, b))
}

fn sign(r: &MatRing, x: QMat, negate: bool) -> QMat {
    if negate {
        r.neg(&x)
    } else {
        x
    }
}

pub(super) fn entries() -> Vec<Entry> {
    vec![
        def(
            "CF-CONVERGENTS",
            "Prop 4.1, Cor 4.2",
            "The following proposition was formulated in",
            MODULE,
            &["convergents_explicit", "convergents_recurrence", "qdet"],
            &[1, 2, 3, 4, 5, 6],
            sample_upper,
            |ctx, pt| {
                let (r, a) = hessenberg_from(ctx, pt)?;
                let n = a.nrows();
                let (p, q) = convergents_explicit(&r, &a);
                let (ps, qs) = convergents_recurrence(&r, &a);
                let mut s = Sides::one(&r, &ps[n], &p);
                s.push(&r, &qs[n], &q);
                s.push(&r, &qd(&r, &a, 1, n)?, &p);
                if n >= 2 {
                    s.push(&r, &qd(&r, &a.delete_row_col(1, 1)?, 2, n)?, &q);
                }
                s.push(&r, &qd(&r, &a, 1, 1)?, &r.mul(&p, &invert(&r, &q)?));
                Ok(s)
            },
        ),
        def(
            "CF-NESTED",
            "Sec IIII.1",
            "can be written as a generalized continued fraction",
            MODULE,
            &["nested_fraction", "qdet"],
            &[1, 2, 3, 4, 5, 6],
            sample_upper,
            |ctx, pt| {
                let (r, a) = hessenberg_from(ctx, pt)?;
                Ok(Sides::one(&r, &nested_fraction(&r, &a)?, &qd(&r, &a, 1, 1)?))
            },
        ),
        def(
            "CF-JACOBI",
            "Cor 4.4",
            "For a Jacobian matrix",
            MODULE,
            &["jacobi_convergents", "convergents_recurrence", "qdet"],
            &[1, 2, 3, 4, 5, 6],
            |ctx, rng| {
                let ring = ctx.ring();
                let mut pt = Assignment::new();
                pt.put_list(&ring, "a", &super::super::random_list(ctx, rng, ctx.n));
                pt.put_list(&ring, "b", &super::super::random_list(ctx, rng, 2));
                pt
            },
            |ctx, pt| {
                let r = ctx.ring();
                let (a, b) = (pt.get_list(&r, "a")?, pt.get_list(&r, "b")?);
                let n = a.len();
                let (p, q) = jacobi_convergents(&r, &a);
                let (pr, qr) = convergents_recurrence(&r, &jacobi_matrix(&r, &a));
                let mut s = Sides::new();
                for (x, y) in p.iter().zip(&pr).chain(q.iter().zip(&qr)) {
                    s.push(&r, x, y);
                }
                let mut t = a[n - 1].clone();
                for k in (0..n - 1).rev() {
                    t = r.add(&a[k], &invert(&r, &t)?);
                }
                let jac = jacobi_matrix(&r, &a);
                s.push(&r, &qd(&r, &jac, 1, 1)?, &t);
                s.push(&r, &t, &r.mul(&p[n], &invert(&r, &q[n])?));
                // Q_k ignores a_1; P_k and Q_k ignore a_{k+1}, ...
                let mut first = a.clone();
                first[0] = b[0].clone();
                let (_, q_first) = jacobi_convergents(&r, &first);
                for (x, y) in q_first.iter().zip(&q) {
                    s.push(&r, x, y);
                }
                let mut last = a.clone();
                last[n - 1] = b[1].clone();
                let (p_last, q_last) = jacobi_convergents(&r, &last);
                for k in 0..n {
                    s.push(&r, &p_last[k], &p[k]);
                    s.push(&r, &q_last[k], &q[k]);
                }
                Ok(s)
            },
        ),
        def(
            "BERENSTEIN",
            "Cor 4.3",
            "pointed out to us by A. Berenstein",
            MODULE,
            &["berenstein_matrix", "convergents_recurrence", "qdet"],
            &[1, 2, 3, 4, 5],
            sample_berenstein_general,
            eval_berenstein,
        )
        .fixed_dims(&[3]),
        def(
            "BERENSTEIN-CHAIN",
            "Cor 4.3 with commuting non-neighbours",
            "$$ P_n=|A_n|_{1n}=a_{nn}a_{n-1n-1}\\dots a_{11}",
            MODULE,
            &["berenstein_matrix", "convergents_recurrence", "qdet"],
            &[1, 2, 3, 4, 5],
            sample_berenstein_chain,
            eval_berenstein,
        )
        .fixed_dims(&[HEIS_CHAIN_DIM]),
        def(
            "SERIES-THM45",
            "Thm 4.5",
            "The following theorem was proved in [PPR]",
            MODULE,
            &["series_convergents", "qdet"],
            &[SERIES_SIZE],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, SERIES_SIZE, SERIES_SIZE),
            |ctx, pt| {
                let (base, m) = (ctx.ring(), mat(ctx, pt, "A")?);
                let r = TruncRing::new(base.clone(), SERIES_ORDER);
                // Column grading: the entry in column j carries t^{j-1}, so
                // only r <= SERIES_MAX_R contributes below the truncation order.
                let a = hessenberg(&r, SERIES_SIZE, |i, j| {
                    if i == j {
                        r.linear(base.one(), m.e(i, j).clone())
                    } else {
                        r.monomial(m.e(i, j).clone(), j - 1)
                    }
                });
                let (p, q) = series_convergents(&r, &a, SERIES_MAX_R)?;
                let qi = r.try_inv(&q).ok_or_else(|| Error::domain("Q is not invertible"))?;
                let lhs = qdet(&r, &a, 1, 1, AUTO)?;
                Ok(Sides::one(&r, &lhs, &r.mul(&p, &qi)))
            },
        )
        .dims(&[1, 2])
        .samples(4),
        def(
            "RR-SERIES",
            "Cor 4.6",
            "Rogers-Ramanujan continued fraction identity",
            MODULE,
            &["rogers_ramanujan_fraction", "rogers_ramanujan_by_convergents", "rogers_ramanujan_ratio"],
            &[1],
            |_, _| Assignment::new(),
            |_, _| {
                let r = QSeriesRing::new(RR_ORDER);
                let ratio = rogers_ramanujan_ratio(&r)?;
                let mut s = Sides::one(&r, &rogers_ramanujan_by_convergents(&r, RR_DEPTH)?, &ratio);
                s.push(&r, &rogers_ramanujan_by_convergents(&r, RR_DEPTH + 1)?, &ratio);
                s.push(&r, &rogers_ramanujan_fraction(&r, RR_DEPTH)?, &ratio);
                s.push_value(ratio[1].to_string(), "-q");
                Ok(s)
            },
        )
        .fixed_dims(&[1])
        .samples(1),
        def(
            "ALMOST-TRI-47",
            "Prop 4.7",
            "Homological relations imply the following proposition",
            MODULE,
            &["almost_triangular_d", "almost_triangular_sum", "qdet"],
            &[1, 2, 3, 4, 5],
            sample_upper,
            |ctx, pt| {
                let (r, b) = almost_triangular(ctx, pt, false)?;
                let n = b.nrows();
                let q1n = qd(&r, &b, 1, n)?;
                let d = almost_triangular_d(&r, &b, AUTO)?;
                let mut s = Sides::one(&r, &sign(&r, d, n % 2 == 0), &q1n);
                s.push(&r, &almost_triangular_sum(&r, &b)?, &q1n);
                Ok(s)
            },
        ),
        def(
            "ALMOST-TRI-48-UNIT",
            "Prop 4.8",
            "It is interesting to find out other quasideterminants",
            MODULE,
            &["unit_subdiagonal_qdet", "d_range", "qdet"],
            &[1, 2, 3, 4, 5],
            sample_upper,
            |ctx, pt| {
                let (r, b) = almost_triangular(ctx, pt, true)?;
                let n = b.nrows();
                let mut s = Sides::new();
                for i in 1..=n {
                    for j in i..=n {
                        s.push(&r, &unit_subdiagonal_qdet(&r, &b, i, j, AUTO)?, &qd(&r, &b, i, j)?);
                    }
                }
                Ok(s)
            },
        ),
        def(
            "ALMOST-TRI-48",
            "Prop 4.8",
            "all $b_{i+1i}$'s are invertible",
            MODULE,
            &["almost_triangular_qdet", "qdet"],
            &[1, 2, 3, 4, 5],
            sample_upper,
            |ctx, pt| {
                let (r, b) = almost_triangular(ctx, pt, false)?;
                let n = b.nrows();
                let mut s = Sides::new();
                for i in 1..=n {
                    for j in i..=n {
                        s.push(&r, &almost_triangular_qdet(&r, &b, i, j, AUTO)?, &qd(&r, &b, i, j)?);
                    }
                }
                Ok(s)
            },
        ),
    ]
}

fn nonzero(ctx: &Ctx, rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let c = ctx.profile.sample_rational(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Element `c I + sum x_k E_{1,k+1} + sum y_k E_{k+1,m+2} + z E_{1,m+2}` of the
/// Heisenberg algebra of dimension `2m + 1`, as an `(m + 2) x (m + 2)` matrix.
/// The commutator `[u, v]` is `(x_u . y_v - x_v . y_u) E_{1,m+2}`, central.
fn heisenberg(c: &BigRational, x: &[BigRational], y: &[BigRational], z: &BigRational) -> QMat {
    let m = x.len();
    let d = m + 2;
    let mut data = vec![BigRational::zero(); d * d];
    for k in 0..d {
        data[k * d + k] = c.clone();
    }
    for k in 0..m {
        data[k + 1] = x[k].clone();
        data[(k + 1) * d + d - 1] = y[k].clone();
    }
    data[d - 1] = z.clone();
    QMat::new(d, data)
}

/// Matrix size of the chain realization.
const HEIS_CHAIN_DIM: usize = 5;

/// Diagonal entries in the 7-dimensional Heisenberg algebra whose symplectic
/// parts pair only neighbours: `[a_jj, a_ii] = 0` for `j > i + 1`, so every
/// `a_ij` off the first superdiagonal vanishes.
fn sample_berenstein_chain(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
    let zero = BigRational::zero();
    // (x index, y index) of the nonzero symplectic coordinates of v_1..v_5.
    let pattern: [(Option<usize>, Option<usize>); 5] =
        [(Some(0), None), (Some(1), Some(0)), (Some(2), Some(1)), (None, Some(2)), (Some(2), None)];
    let diag: Vec<QMat> = pattern[..ctx.n]
        .iter()
        .map(|&(xi, yi)| {
            let mut x = vec![zero.clone(); 3];
            let mut y = vec![zero.clone(); 3];
            if let Some(k) = xi {
                x[k] = nonzero(ctx, rng);
            }
            if let Some(k) = yi {
                y[k] = nonzero(ctx, rng);
            }
            let c = nonzero(ctx, rng);
            let z = ctx.profile.sample_rational(rng);
            heisenberg(&c, &x, &y, &z)
        })
        .collect();
    let mut pt = Assignment::new();
    pt.put_list(&ctx.ring(), "diag", &diag);
    pt
}

/// Generic diagonal entries in the 3-dimensional Heisenberg algebra.
fn sample_berenstein_general(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
    let diag: Vec<QMat> = (0..ctx.n)
        .map(|_| {
            let c = nonzero(ctx, rng);
            let [x, y, z] = [0; 3].map(|_| ctx.profile.sample_rational(rng));
            heisenberg(&c, &[x], &[y], &z)
        })
        .collect();
    let mut pt = Assignment::new();
    pt.put_list(&ctx.ring(), "diag", &diag);
    pt
}

fn eval_berenstein(ctx: &Ctx, pt: &Assignment) -> Result<Sides> {
    let r = ctx.ring();
    let diag = pt.get_list(&r, "diag")?;
    let n = diag.len();
    let a = berenstein_matrix(&r, &diag);
    let rhs = r.product(diag.iter().rev());
    let (p, _) = convergents_recurrence(&r, &a);
    let mut s = Sides::one(&r, &p[n], &rhs);
    s.push(&r, &qd(&r, &a, 1, n)?, &rhs);
    // The hypotheses: off-diagonal entries are central.
    for i in 1..=n {
        for j in i + 1..=n {
            for x in &diag {
                s.push(&r, &r.mul(a.e(i, j), x), &r.mul(x, a.e(i, j)));
            }
        }
    }
    Ok(s)
}

/// `D(1..i-1)^{-1} D(1..n) D(j+1..n)^{-1}` without the sign.
pub(super) fn unsigned_d_ratio(r: &MatRing, b: &NcMatrix<QMat>, i: usize, j: usize) -> Result<QMat> {
    let n = b.nrows();
    let left = invert(r, &d_range(r, b, 1, i - 1, AUTO)?)?;
    let right = invert(r, &d_range(r, b, j + 1, n, AUTO)?)?;
    Ok(r.product(&[left, d_range(r, b, 1, n, AUTO)?, right]))
}

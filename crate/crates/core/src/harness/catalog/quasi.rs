//! Quasideterminant identities.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::formula::{evaluate, EvalAssignment};
use crate::quasidet::{
    all_qdets, block_qdet, cayley_hamilton, cramer_check, hadamard_inverse, heredity_qdet, inverse_via, matrix_inverse,
    qdet_expansion, qdet_formula, rank_by_quasiminors, solve_system, sylvester_matrix, sylvester_reduce, Expansion,
};
use crate::scalar::SampleRing;

const MODULE: &str = "quasidet";

pub(super) fn entries() -> Vec<Entry> {
    vec![
        def(
            "QDET-DEF-AGREE",
            "Eq 1.1.1 / Eq 1.1.2",
            "both definitions of a quasideterminant coincide",
            MODULE,
            &["qdet"],
            &[1, 2, 3, 4, 5],
            sample_pivot,
            |ctx, pt| {
                let (ring, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (p, q) = (pt.index("p")?, pt.index("q")?);
                let rec = qdet(&ring, &a, p, q, Method::Recursive)?;
                let inv = qdet(&ring, &a, p, q, Method::MinorInverse)?;
                Ok(Sides::one(&ring, &rec, &inv))
            },
        ),
        def(
            "QDET-2X2-CLOSED",
            "Sec I.1.2 example 1",
            "there exist four quasideterminants",
            MODULE,
            &["qdet"],
            &[2],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, 2, 2),
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let e = |i, j| a.e(i, j).clone();
                let term = |x: QMat, y: QMat, z: QMat| -> Result<QMat> { Ok(r.mul(&r.mul(&x, &invert(&r, &y)?), &z)) };
                let mut s = Sides::new();
                s.push(&r, &qd(&r, &a, 1, 1)?, &r.sub(&e(1, 1), &term(e(1, 2), e(2, 2), e(2, 1))?));
                s.push(&r, &qd(&r, &a, 1, 2)?, &r.sub(&e(1, 2), &term(e(1, 1), e(2, 1), e(2, 2))?));
                s.push(&r, &qd(&r, &a, 2, 1)?, &r.sub(&e(2, 1), &term(e(2, 2), e(1, 2), e(1, 1))?));
                s.push(&r, &qd(&r, &a, 2, 2)?, &r.sub(&e(2, 2), &term(e(2, 1), e(1, 1), e(1, 2))?));
                Ok(s)
            },
        ),
        def(
            "QDET-3X3-CLOSED",
            "Sec I.1.2 example 2",
            "there exist 9 quasideterminants",
            MODULE,
            &["qdet"],
            &[3],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, 3, 3),
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let e = |i, j| a.e(i, j).clone();
                // x - y z^{-1} w
                let q2 = |x: QMat, y: QMat, z: QMat, w: QMat| -> Result<QMat> {
                    Ok(r.sub(&x, &r.mul(&r.mul(&y, &invert(&r, &z)?), &w)))
                };
                let inner = [
                    (e(1, 2), q2(e(2, 2), e(2, 3), e(3, 3), e(3, 2))?, e(2, 1)),
                    (e(1, 2), q2(e(3, 2), e(3, 3), e(2, 3), e(2, 2))?, e(3, 1)),
                    (e(1, 3), q2(e(2, 3), e(2, 2), e(3, 2), e(3, 3))?, e(2, 1)),
                    (e(1, 3), q2(e(3, 3), e(3, 2), e(2, 2), e(2, 3))?, e(3, 1)),
                ];
                let mut rhs = e(1, 1);
                for (x, m, y) in inner {
                    rhs = r.sub(&rhs, &r.mul(&r.mul(&x, &invert(&r, &m)?), &y));
                }
                Ok(Sides::one(&r, &qd(&r, &a, 1, 1)?, &rhs))
            },
        ),
        def(
            "QDET-COMMUTATIVE",
            "Sec I.1.2 example 3",
            "variables $a_{ij}$ commute each other",
            MODULE,
            &["qdet"],
            &[1, 2, 3, 4, 5],
            sample_pivot,
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (p, q) = (pt.index("p")?, pt.index("q")?);
                let det = |m: &NcMatrix<QMat>| if m.nrows() == 0 { num_traits::One::one() } else { r.flatten(m).det_bareiss() };
                let minor = det(&a.delete_row_col(p, q)?);
                let lhs = qd(&r, &a, p, q)?.get(0, 0) * &minor;
                let mut rhs = det(&a);
                if (p + q) % 2 == 1 {
                    rhs = -rhs;
                }
                let mut s = Sides::new();
                s.push_value(crate::linalg::rational_to_string(&lhs), crate::linalg::rational_to_string(&rhs));
                Ok(s)
            },
        )
        .fixed_dims(&[1]),
        def(
            "QDET-FORMULA",
            "Thm I.1.5",
            "have the inversion height $n-1$",
            MODULE,
            &["qdet", "formula_height", "evaluate"],
            &[1, 2, 3, 4],
            sample_pivot,
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (p, q) = (pt.index("p")?, pt.index("q")?);
                let n = a.nrows();
                let f = qdet_formula(n, p, q)?;
                let mut sigma: EvalAssignment<QMat> = EvalAssignment::new();
                for i in 1..=n {
                    for j in 1..=n {
                        sigma.insert(format!("a_{i}_{j}"), a.e(i, j).clone());
                    }
                }
                let mut s = Sides::one(&r, &evaluate(&f, &sigma, &r)?, &qd(&r, &a, p, q)?);
                s.push_value(f.height(), n - 1);
                Ok(s)
            },
        ),
        def(
            "INVERSE-HI",
            "Thm 1.2.1",
            "For a square matrix A with formal entries",
            MODULE,
            &["matrix_inverse", "hadamard_inverse", "all_qdets"],
            &[1, 2, 3, 4],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, ctx.n, ctx.n),
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let n = a.nrows();
                let b = inverse_via(&r, &a, AUTO)?;
                let id = NcMatrix::identity(&r, n);
                let mut s = Sides::new();
                s.push_matrix(&r, &a.mul(&r, &b)?, &id)?;
                s.push_matrix(&r, &b.mul(&r, &a)?, &id)?;
                let flat = r.invert_matrix(&a).ok_or_else(|| Error::domain("singular"))?;
                s.push_matrix(&r, &b, &flat)?;
                s.push_matrix(&r, &hadamard_inverse(&r, &b)?, &all_qdets(&r, &a, AUTO)?)?;
                Ok(s)
            },
        ),
        def(
            "HADAMARD-INVOLUTION",
            "Sec I.2.1",
            "by $HA=(a^{-1}_{ji})$ its Hadamard inverse",
            MODULE,
            &["hadamard_inverse", "matrix_inverse"],
            &[1, 2, 3],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, ctx.n, ctx.n),
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let mut s = Sides::new();
                s.push_matrix(&r, &hadamard_inverse(&r, &hadamard_inverse(&r, &a)?)?, &a)?;
                s.push_matrix(&r, &matrix_inverse(&r, &matrix_inverse(&r, &a)?)?, &a)?;
                Ok(s)
            },
        ),
        def(
            "HOMOLOGICAL-ROW",
            "Thm 1.2.3 a",
            "Row homological relations",
            MODULE,
            &["qdet"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                let i = idx(rng, n);
                let j = idx(rng, n);
                pt.put_index("i", i);
                pt.put_index("j", j);
                pt.put_index("l", idx_except(rng, n, &[j]));
                pt.put_index("s", idx_except(rng, n, &[i]));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let [i, j, l, s] = ["i", "j", "l", "s"].map(|k| pt.index(k).unwrap_or(0));
                let lhs = r.neg(&r.mul(&qd(&r, &a, i, j)?, &qd_inv(&r, &a.delete_row_col(i, l)?, s, j)?));
                let rhs = r.mul(&qd(&r, &a, i, l)?, &qd_inv(&r, &a.delete_row_col(i, j)?, s, l)?);
                Ok(Sides::one(&r, &lhs, &rhs))
            },
        ),
        def(
            "HOMOLOGICAL-COL",
            "Thm 1.2.3 b",
            "Column homological relations",
            MODULE,
            &["qdet"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                let i = idx(rng, n);
                let j = idx(rng, n);
                pt.put_index("i", i);
                pt.put_index("j", j);
                pt.put_index("k", idx_except(rng, n, &[i]));
                pt.put_index("t", idx_except(rng, n, &[j]));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let [i, j, k, t] = ["i", "j", "k", "t"].map(|x| pt.index(x).unwrap_or(0));
                let lhs = r.neg(&r.mul(&qd_inv(&r, &a.delete_row_col(k, j)?, i, t)?, &qd(&r, &a, i, j)?));
                let rhs = r.mul(&qd_inv(&r, &a.delete_row_col(i, j)?, k, t)?, &qd(&r, &a, k, j)?);
                Ok(Sides::one(&r, &lhs, &rhs))
            },
        ),
        def(
            "HEREDITY-2BLOCK",
            "Thm 1.2.3 (heredity)",
            "can be computed in two steps",
            MODULE,
            &["qdet", "matrix_inverse"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                let k = rng.gen_range(1..n);
                pt.put_index("k", k);
                pt.put_index("i", idx(rng, k));
                pt.put_index("j", idx(rng, k));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (k, i, j) = (pt.index("k")?, pt.index("i")?, pt.index("j")?);
                let n = a.nrows();
                let head: Vec<usize> = (1..=k).collect();
                let tail: Vec<usize> = (k + 1..=n).collect();
                let a22 = matrix_inverse(&r, &a.select(&tail, &tail)?)?;
                let corr = a.select(&head, &tail)?.mul(&r, &a22)?.mul(&r, &a.select(&tail, &head)?)?;
                let schur = a.select(&head, &head)?.sub(&r, &corr)?;
                Ok(Sides::one(&r, &qd(&r, &a, i, j)?, &qd(&r, &schur, i, j)?))
            },
        ),
        def(
            "HEREDITY-GENERAL",
            "Thm 1.2.4",
            "the matrix with $A_{ij}$'s as entries",
            MODULE,
            &["heredity_qdet", "block_qdet"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                let sizes = composition(rng, n);
                let bp = idx(rng, sizes.len());
                let same: Vec<usize> = (1..=sizes.len()).filter(|&b| sizes[b - 1] == sizes[bp - 1]).collect();
                let bq = same[rng.gen_range(0..same.len())];
                let start = |b: usize| sizes[..b - 1].iter().sum::<usize>();
                let m = sizes[bp - 1];
                pt.put_indices("sizes", &sizes);
                pt.put_index("bp", bp);
                pt.put_index("bq", bq);
                pt.put_index("k", start(bp) + idx(rng, m));
                pt.put_index("l", start(bq) + idx(rng, m));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let sizes = pt.indices("sizes")?;
                let (bp, bq, k, l) = (pt.index("bp")?, pt.index("bq")?, pt.index("k")?, pt.index("l")?);
                let h = heredity_qdet(&r, &a, &sizes, &sizes, (bp, bq), (k, l), AUTO)?;
                let mut s = Sides::one(&r, &h, &qd(&r, &a, k, l)?);
                // The trivial partition returns the matrix itself.
                let ones = vec![1; a.nrows()];
                let whole = block_qdet(&r, &a, &[a.nrows()], &[a.nrows()], (1, 1))?;
                s.push_matrix(&r, &whole, &a)?;
                let unit = heredity_qdet(&r, &a, &ones, &ones, (k, l), (k, l), AUTO)?;
                s.push(&r, &unit, &qd(&r, &a, k, l)?);
                Ok(s)
            },
        ),
        def(
            "PERM-INVARIANCE",
            "Sec I.2.5 i",
            "if the $p$-$th$ row and the $q $-$th$ column are not changed",
            MODULE,
            &["qdet"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = sample_pivot(ctx, rng);
                let (p, q) = (pt.index("p").unwrap_or(1), pt.index("q").unwrap_or(1));
                pt.put_indices("rows", &fixing(rng, n, p));
                pt.put_indices("cols", &fixing(rng, n, q));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (p, q) = (pt.index("p")?, pt.index("q")?);
                let rows: Vec<usize> = pt.indices("rows")?.iter().map(|x| x - 1).collect();
                let cols: Vec<usize> = pt.indices("cols")?.iter().map(|x| x - 1).collect();
                let b = a.select_positions(&rows, &cols);
                let mut s = Sides::new();
                for m in [Method::Recursive, Method::MinorInverse] {
                    s.push(&r, &qdet(&r, &b, p, q, m)?, &qdet(&r, &a, p, q, m)?);
                }
                Ok(s)
            },
        ),
        def(
            "ROW-COL-SCALING",
            "Sec I.2.5 ii",
            "The multiplication of rows and columns",
            MODULE,
            &["qdet"],
            &[1, 2, 3, 4],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                let ring = ctx.ring();
                pt.put(&ring, "lambda", &ring.sample(rng, &ctx.profile));
                for k in ["i", "j", "k", "l"] {
                    pt.put_index(k, idx(rng, n));
                }
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let lambda = pt.get(&r, "lambda")?;
                invert(&r, &lambda)?;
                let [i, j, k, l] = ["i", "j", "k", "l"].map(|x| pt.index(x).unwrap_or(0));
                let b = a.scale_row_left(&r, i, &lambda)?;
                let c = a.scale_col_right(&r, j, &lambda)?;
                let mut s = Sides::new();
                s.push(&r, &qd(&r, &b, i, k)?, &r.mul(&lambda, &qd(&r, &a, i, k)?));
                s.push(&r, &qd(&r, &c, l, j)?, &r.mul(&qd(&r, &a, l, j)?, &lambda));
                if k != i {
                    s.push(&r, &qd(&r, &b, k, l)?, &qd(&r, &a, k, l)?);
                }
                if l != j {
                    s.push(&r, &qd(&r, &c, k, l)?, &qd(&r, &a, k, l)?);
                }
                Ok(s)
            },
        ),
        def(
            "ROW-COL-ADDITION",
            "Sec I.2.5 iii",
            "The addition of rows and columns",
            MODULE,
            &["qdet"],
            &[2, 3, 4],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                let ring = ctx.ring();
                pt.put(&ring, "lambda", &ring.sample(rng, &ctx.profile));
                pt.put(&ring, "mu", &ring.sample(rng, &ctx.profile));
                let k = idx(rng, n);
                let l = idx(rng, n);
                pt.put_index("k", k);
                pt.put_index("target_row", idx_except(rng, n, &[k]));
                pt.put_index("l", l);
                pt.put_index("target_col", idx_except(rng, n, &[l]));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (lambda, mu) = (pt.get(&r, "lambda")?, pt.get(&r, "mu")?);
                let (k, l) = (pt.index("k")?, pt.index("l")?);
                let b = a.row_op_left(&r, pt.index("target_row")?, k, &lambda)?;
                let c = a.col_op_right(&r, pt.index("target_col")?, l, &mu)?;
                let n = a.nrows();
                let mut s = Sides::new();
                for i in (1..=n).filter(|&i| i != k) {
                    for j in 1..=n {
                        s.push(&r, &qd(&r, &b, i, j)?, &qd(&r, &a, i, j)?);
                    }
                }
                for i in 1..=n {
                    for j in (1..=n).filter(|&j| j != l) {
                        s.push(&r, &qd(&r, &c, i, j)?, &qd(&r, &a, i, j)?);
                    }
                }
                Ok(s)
            },
        ),
        def(
            "KRONECKER-XY",
            "Sec I.2.5 iii",
            "consists of the elements $\\delta_{ik}$",
            MODULE,
            &["qdet"],
            &[2, 3, 4],
            |ctx, rng| {
                let n = ctx.n;
                let ring = ctx.ring();
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                let (k, l) = (idx(rng, n), idx(rng, n));
                let x = NcMatrix::from_fn(n, n, |i, j| {
                    if j + 1 == k {
                        if i == j { ring.one() } else { ring.zero() }
                    } else {
                        ring.sample(rng, &ctx.profile)
                    }
                });
                let y = NcMatrix::from_fn(n, n, |i, j| {
                    if i + 1 == l {
                        if i == j { ring.one() } else { ring.zero() }
                    } else {
                        ring.sample(rng, &ctx.profile)
                    }
                });
                pt.put_matrix(&ring, "X", &x);
                pt.put_matrix(&ring, "Y", &y);
                pt.put_index("k", k);
                pt.put_index("l", l);
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (x, y) = (mat(ctx, pt, "X")?, mat(ctx, pt, "Y")?);
                let (k, l) = (pt.index("k")?, pt.index("l")?);
                let (xa, ay) = (x.mul(&r, &a)?, a.mul(&r, &y)?);
                let n = a.nrows();
                let mut s = Sides::new();
                for j in 1..=n {
                    s.push(&r, &qd(&r, &xa, k, j)?, &qd(&r, &a, k, j)?);
                }
                for i in 1..=n {
                    s.push(&r, &qd(&r, &ay, i, l)?, &qd(&r, &a, i, l)?);
                }
                Ok(s)
            },
        ),
        def(
            "ZERO-CRITERION",
            "Prop 1.2.5",
            "left linear combination of the other rows",
            MODULE,
            &["qdet"],
            &[2, 3, 4],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                let ring = ctx.ring();
                pt.put_list(&ring, "lambda", &super::super::random_list(ctx, rng, n));
                pt.put_list(&ring, "mu", &super::super::random_list(ctx, rng, n));
                pt.put_index("i", idx(rng, n));
                pt.put_index("j", idx(rng, n));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (lambda, mu) = (pt.get_list(&r, "lambda")?, pt.get_list(&r, "mu")?);
                let (i, j) = (pt.index("i")?, pt.index("j")?);
                let n = a.nrows();
                // Row i replaced by sum_{k != i} lambda_k a_k.
                let mut rows = a.clone();
                for c in 1..=n {
                    let v = (1..=n).filter(|&k| k != i).fold(r.zero(), |acc, k| r.add(&acc, &r.mul(&lambda[k - 1], a.e(k, c))));
                    rows = rows.with_entry(i, c, v)?;
                }
                let mut cols = a.clone();
                for rr in 1..=n {
                    let v = (1..=n).filter(|&k| k != j).fold(r.zero(), |acc, k| r.add(&acc, &r.mul(a.e(rr, k), &mu[k - 1])));
                    cols = cols.with_entry(rr, j, v)?;
                }
                let mut s = Sides::new();
                let z = r.zero();
                s.push(&r, &qd(&r, &rows, i, j)?, &z);
                s.push(&r, &qd(&r, &cols, i, j)?, &z);
                Ok(s)
            },
        ),
        def(
            "RANK-QUASIMINORS",
            "Prop 1.2.6",
            "at least one of the $r$-quasiminors",
            MODULE,
            &["rank_by_quasiminors"],
            &[1, 2, 3, 4],
            |ctx, rng| {
                let n = ctx.n;
                let ring = ctx.ring();
                let rank = rng.gen_range(0..=n);
                let a = if rank == 0 {
                    NcMatrix::zeros(&ring, n, n)
                } else {
                    let u = super::super::random_matrix(ctx, rng, n, rank);
                    let v = super::super::random_matrix(ctx, rng, rank, n);
                    u.mul(&ring, &v).expect("shapes agree")
                };
                let mut pt = Assignment::new();
                pt.put_matrix(&ring, "A", &a);
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let mut s = Sides::new();
                s.push_value(rank_by_quasiminors(&r, &a, AUTO), r.flatten(&a).rank());
                Ok(s)
            },
        )
        .fixed_dims(&[1]),
        def(
            "EXPANSION-ROW",
            "Prop 1.2.7",
            "analogue of the classical expansion",
            MODULE,
            &["qdet_expansion"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let mut pt = sample_pivot(ctx, rng);
                let p = pt.index("p").unwrap_or(1);
                pt.put_index("k", idx_except(rng, ctx.n, &[p]));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (p, q, k) = (pt.index("p")?, pt.index("q")?, pt.index("k")?);
                let e = qdet_expansion(&r, &a, p, q, Expansion::Row(k), AUTO)?;
                Ok(Sides::one(&r, &e, &qd(&r, &a, p, q)?))
            },
        ),
        def(
            "EXPANSION-COL",
            "Prop 1.2.7",
            "analogue of the classical expansion",
            MODULE,
            &["qdet_expansion"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let mut pt = sample_pivot(ctx, rng);
                let q = pt.index("q").unwrap_or(1);
                pt.put_index("l", idx_except(rng, ctx.n, &[q]));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (p, q, l) = (pt.index("p")?, pt.index("q")?, pt.index("l")?);
                let e = qdet_expansion(&r, &a, p, q, Expansion::Column(l), AUTO)?;
                Ok(Sides::one(&r, &e, &qd(&r, &a, p, q)?))
            },
        ),
        def(
            "SYLVESTER",
            "Thm 1.3.1",
            "a pivot for matrix B",
            MODULE,
            &["sylvester_reduce"],
            &[2, 3, 4, 5],
            sample_sylvester,
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let k: Vec<usize> = (1..=pt.index("k")?).collect();
                let (i, j) = (pt.index("i")?, pt.index("j")?);
                let mut s = Sides::one(&r, &sylvester_reduce(&r, &a, &k, i, j, AUTO)?, &qd(&r, &a, i, j)?);
                s.push(&r, &sylvester_reduce(&r, &a, &[], i, j, AUTO)?, &qd(&r, &a, i, j)?);
                Ok(s)
            },
        ),
        def(
            "SYLVESTER-COMMUTATIVE",
            "Cor 1.3.2",
            "Suppose that its submatrix",
            MODULE,
            &["sylvester_matrix"],
            &[2, 3, 4, 5],
            sample_sylvester,
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let k = pt.index("k")?;
                let n = a.nrows();
                let head: Vec<usize> = (1..=k).collect();
                let det0 = r.flatten(&a.select(&head, &head)?).det_bareiss();
                // b~_pq = det of the bordered matrix = b_pq det A_0.
                let b = sylvester_matrix(&r, &a, &head, AUTO)?;
                let bt = b.map(|x| QMat::scalar(1, &(x.get(0, 0) * &det0)));
                let lhs = r.flatten(&a).det_bareiss() * num_traits::pow(det0.clone(), n - k - 1);
                let rhs = r.flatten(&bt).det_bareiss();
                // Bordered determinants computed directly, as a second route.
                let mut direct = Vec::new();
                for p in k + 1..=n {
                    for q in k + 1..=n {
                        let mut rs = head.clone();
                        rs.push(p);
                        let mut cs = head.clone();
                        cs.push(q);
                        direct.push(crate::linalg::rational_to_string(&r.flatten(&a.select(&rs, &cs)?).det_bareiss()));
                    }
                }
                let via: Vec<String> = bt.entries().iter().map(|x| crate::linalg::rational_to_string(x.get(0, 0))).collect();
                let mut s = Sides::new();
                s.push_value(crate::linalg::rational_to_string(&lhs), crate::linalg::rational_to_string(&rhs));
                s.push_value(via, direct);
                Ok(s)
            },
        )
        .fixed_dims(&[1]),
        def(
            "JACOBI-INVOLUTION",
            "Thm 1.3.3",
            "Let $k\\notin P, \\ell\\notin Q$",
            MODULE,
            &["qdet", "matrix_inverse"],
            &[1, 2, 3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                let size = rng.gen_range(0..n);
                let k = idx(rng, n);
                let l = idx(rng, n);
                pt.put_index("k", k);
                pt.put_index("l", l);
                pt.put_indices("P", &subset(rng, n, size, &[k]));
                pt.put_indices("Q", &subset(rng, n, size, &[l]));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (k, l) = (pt.index("k")?, pt.index("l")?);
                let (p, q) = (pt.indices("P")?, pt.indices("Q")?);
                let n = a.nrows();
                let b = matrix_inverse(&r, &a)?.normalized();
                let mut pk = p.clone();
                pk.push(k);
                let mut ql = q.clone();
                ql.push(l);
                let left = qd(&r, &a.select(&pk, &ql)?, k, l)?;
                let rows: Vec<usize> = (1..=n).filter(|x| !q.contains(x)).collect();
                let cols: Vec<usize> = (1..=n).filter(|x| !p.contains(x)).collect();
                let right = qd(&r, &b.select(&rows, &cols)?, l, k)?;
                let mut s = Sides::one(&r, &r.mul(&left, &right), &r.one());
                s.push(&r, &r.mul(&qd(&r, &a, k, l)?, b.e(l, k)), &r.one());
                Ok(s)
            },
        ),
        def(
            "GEN-HOMOLOGICAL",
            "Thm 1.3.4",
            "For $p\\notin L$",
            MODULE,
            &["qdet"],
            &[2, 3, 4, 5],
            sample_gen_homological,
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (sum1, sum2) = gen_homological_sums(&r, &a, pt)?;
                let delta = if pt.index("p")? == pt.index("l")? { r.one() } else { r.zero() };
                let mut s = Sides::one(&r, &sum1, &delta);
                s.push(&r, &sum2, &delta);
                Ok(s)
            },
        ),
        def(
            "MULTIPLICATIVE",
            "Thm 1.3.5",
            "Multiplicative properties of quasideterminants",
            MODULE,
            &["qdet"],
            &[1, 2, 3, 4],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = Assignment::new();
                put_random(ctx, rng, &mut pt, "X", n, n);
                put_random(ctx, rng, &mut pt, "Y", n, n);
                pt.put_index("i", idx(rng, n));
                pt.put_index("j", idx(rng, n));
                pt
            },
            |ctx, pt| {
                let r = ctx.ring();
                let (x, y) = (mat(ctx, pt, "X")?, mat(ctx, pt, "Y")?);
                let (i, j) = (pt.index("i")?, pt.index("j")?);
                let lhs = qd_inv(&r, &x.mul(&r, &y)?, i, j)?;
                let mut rhs = r.zero();
                for p in 1..=x.nrows() {
                    rhs = r.add(&rhs, &r.mul(&qd_inv(&r, &y, p, j)?, &qd_inv(&r, &x, i, p)?));
                }
                Ok(Sides::one(&r, &lhs, &rhs))
            },
        ),
        def(
            "LINEAR-SOLVE",
            "Thm 1.4.1",
            "the quasideterminants of $A$ are defined and invertible",
            MODULE,
            &["solve_system"],
            &[1, 2, 3, 4],
            sample_system,
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let xi = pt.get_list(&r, "xi")?;
                let x = solve_system(&r, &a, &xi, AUTO)?;
                let n = a.nrows();
                let mut s = Sides::new();
                for i in 1..=n {
                    let v = (1..=n).fold(r.zero(), |acc, j| r.add(&acc, &r.mul(a.e(i, j), &x[j - 1])));
                    s.push(&r, &v, &xi[i - 1]);
                }
                Ok(s)
            },
        ),
        def(
            "CRAMER",
            "Thm 1.4.2",
            "replacing in the matrix $A$ its",
            MODULE,
            &["cramer_check", "solve_system"],
            &[1, 2, 3, 4],
            |ctx, rng| {
                let mut pt = sample_system(ctx, rng);
                pt.put_index("i", idx(rng, ctx.n));
                pt.put_index("j", idx(rng, ctx.n));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let xi = pt.get_list(&r, "xi")?;
                let (lhs, rhs) = cramer_check(&r, &a, &xi, pt.index("i")?, pt.index("j")?, AUTO)?;
                Ok(Sides::one(&r, &lhs, &rhs))
            },
        ),
        def(
            "CH-2",
            "Thm 1.4.3",
            "We do not suppose that $t$ commutes",
            MODULE,
            &["cayley_hamilton"],
            &[2],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, 2, 2),
            eval_cayley_hamilton,
        ),
        def(
            "CH-3",
            "Thm 1.4.3",
            "We do not suppose that $t$ commutes",
            MODULE,
            &["cayley_hamilton"],
            &[3],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, 3, 3),
            eval_cayley_hamilton,
        ),
    ]
}

/// `A` with a random pivot `(p, q)`.
fn sample_pivot(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
    let n = ctx.n;
    let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
    pt.put_index("p", idx(rng, n));
    pt.put_index("q", idx(rng, n));
    pt
}

fn sample_sylvester(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
    let n = ctx.n;
    let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
    let k = rng.gen_range(1..n);
    pt.put_index("k", k);
    pt.put_index("i", k + idx(rng, n - k));
    pt.put_index("j", k + idx(rng, n - k));
    pt
}

fn sample_system(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
    let mut pt = super::super::point_with_matrix(ctx, rng, ctx.n, ctx.n);
    pt.put_list(&ctx.ring(), "xi", &super::super::random_list(ctx, rng, ctx.n));
    pt
}

/// A random composition of `n` into at least two parts.
fn composition(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    loop {
        let mut parts = Vec::new();
        let mut run = 1;
        for _ in 1..n {
            if rng.gen_bool(0.5) {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        if parts.len() >= 2 {
            return parts;
        }
    }
}

/// A permutation of `1..=n` (as a position list) fixing `keep`.
fn fixing(rng: &mut ChaCha8Rng, n: usize, keep: usize) -> Vec<usize> {
    let others: Vec<usize> = (1..=n).filter(|&x| x != keep).collect();
    let mut moved = shuffled(rng, &others).into_iter();
    (1..=n).map(|x| if x == keep { keep } else { moved.next().expect("same length") }).collect()
}

/// `L` (rows, size `k`), `M` (columns, size `k + 1`), `p` outside `L`, and
/// `l` in `L` or equal to `p`. The mirrored sum swaps the roles of rows and
/// columns and reuses the same labels.
fn sample_gen_homological(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
    let n = ctx.n;
    let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
    let k = rng.gen_range(0..n);
    let l_set = random_order(rng, n, k);
    let m_set = random_order(rng, n, k + 1);
    let p = idx_except(rng, n, &l_set);
    let mut pool = l_set.clone();
    pool.push(p);
    let l = pool[rng.gen_range(0..pool.len())];
    pt.put_indices("L", &l_set);
    pt.put_indices("M", &m_set);
    pt.put_index("p", p);
    pt.put_index("l", l);
    pt
}

/// `sum_i |A^{L,M_i}|_{p m_i} |A|^{-1}_{l m_i}` and
/// `sum_i |A|^{-1}_{m_i l} |A^{M_i,L}|_{m_i p}`.
pub(super) fn gen_homological_sums(r: &MatRing, a: &NcMatrix<QMat>, pt: &Assignment) -> Result<(QMat, QMat)> {
    let (l_set, m_set) = (pt.indices("L")?, pt.indices("M")?);
    let (p, l) = (pt.index("p")?, pt.index("l")?);
    let mut first = r.zero();
    let mut second = r.zero();
    for &mi in &m_set {
        let rest: Vec<usize> = m_set.iter().copied().filter(|&x| x != mi).collect();
        let left = qd(r, &a.delete_sets(&l_set, &rest)?, p, mi)?;
        first = r.add(&first, &r.mul(&left, &qd_inv(r, a, l, mi)?));
        let right = qd(r, &a.delete_sets(&rest, &l_set)?, mi, p)?;
        second = r.add(&second, &r.mul(&qd_inv(r, a, mi, l)?, &right));
    }
    Ok((first, second))
}

fn eval_cayley_hamilton(ctx: &Ctx, pt: &Assignment) -> Result<Sides> {
    let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
    let f = cayley_hamilton(&r, &a)?;
    let z = r.zero();
    let mut s = Sides::new();
    for block in f.entries() {
        for x in block {
            s.push(&r, x, &z);
        }
    }
    Ok(s)
}

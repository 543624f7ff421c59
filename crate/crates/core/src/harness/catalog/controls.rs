//! Deliberately false statements. Each must produce a counterexample; a
//! pass here means the comparison is vacuous.

use super::continued::{almost_triangular, unsigned_d_ratio};
use super::plucker::{eval_flag, sample_flag};
use super::symmetric::{sample_sym, symmetric_under_all};
use super::*;

const MODULE: &str = "controls";

pub(super) fn entries() -> Vec<Entry> {
    vec![
        def(
            "NEG-QDET-CORNER",
            "Sec I.1 (negated)",
            "$|A|_{11} = a_{11}$ for a generic $2\\times 2$ matrix",
            MODULE,
            &["qdet"],
            &[2],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, 2, 2),
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                Ok(Sides::one(&r, &qd(&r, &a, 1, 1)?, a.e(1, 1)))
            },
        )
        .fails(),
        def(
            "NEG-COMMUTE",
            "Sec I.1 (negated)",
            "$xy = yx$ for random matrix scalars",
            MODULE,
            &["mul"],
            &[1],
            |ctx, rng| {
                let mut pt = Assignment::new();
                pt.put_list(&ctx.ring(), "xy", &super::super::random_list(ctx, rng, 2));
                pt
            },
            |ctx, pt| {
                let r = ctx.ring();
                let v = pt.get_list(&r, "xy")?;
                Ok(Sides::one(&r, &r.mul(&v[0], &v[1]), &r.mul(&v[1], &v[0])))
            },
        )
        .dims(&[2, 3])
        .fails(),
        def(
            "NEG-2X2-DISPLAY-PRINTED",
            "Cor 2.2.3 example, first display as printed",
            "$a_{21}a^{-1}_{11}|A|_{11}a^{-1}_{22}a_{22}=|A|_{22}$",
            MODULE,
            &["qdet"],
            &[2],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, 2, 2),
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let lhs = r.product(&[
                    a.e(2, 1).clone(),
                    invert(&r, a.e(1, 1))?,
                    qd(&r, &a, 1, 1)?,
                    invert(&r, a.e(2, 2))?,
                    a.e(2, 2).clone(),
                ]);
                Ok(Sides::one(&r, &lhs, &qd(&r, &a, 2, 2)?))
            },
        )
        .fails(),
        def(
            "NEG-Y1Y2-SYM",
            "Prop 3.3.2 Remark",
            "the product $y_1 y_2$ is not symmetric",
            MODULE,
            &["y_transform"],
            &[2],
            sample_sym,
            |ctx, pt| symmetric_under_all(ctx, pt, |r, ys| Ok(vec![r.mul(&ys[0], &ys[1])])),
        )
        .dims(&[2])
        .fails(),
        def(
            "NEG-S2-REVERSED",
            "Prop 3.3.3 Remark",
            "$y_1^2 + y_2y_1 + y_2^2$ is not symmetric",
            MODULE,
            &["y_transform"],
            &[2],
            sample_sym,
            |ctx, pt| {
                symmetric_under_all(ctx, pt, |r, ys| {
                    let (y1, y2) = (&ys[0], &ys[1]);
                    Ok(vec![r.sum(&[r.mul(y1, y1), r.mul(y2, y1), r.mul(y2, y2)])])
                })
            },
        )
        .dims(&[2])
        .fails(),
        def(
            "NEG-FLAG-UPPER",
            "Sec II.2.7 Proposition (upper unitriangular)",
            "do not change under",
            MODULE,
            &["flag_coordinate"],
            &[3, 4],
            |ctx, rng| sample_flag(ctx, rng, true),
            eval_flag,
        )
        .fails(),
        def(
            "NEG-PROP48-UNSIGNED",
            "Prop 4.8 as printed",
            "$|B|_{ij}=D(1,\\dots , i-1)^{-1}D(1,\\dots , n)D(j+1,\\dots ,n)^{-1}$",
            MODULE,
            &["d_range", "qdet"],
            &[2, 3],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, ctx.n, ctx.n),
            |ctx, pt| {
                let (r, b) = almost_triangular(ctx, pt, true)?;
                let n = b.nrows();
                let mut s = Sides::new();
                for i in 1..=n {
                    for j in i..=n {
                        s.push(&r, &unsigned_d_ratio(&r, &b, i, j)?, &qd(&r, &b, i, j)?);
                    }
                }
                Ok(s)
            },
        )
        .fails(),
    ]
}

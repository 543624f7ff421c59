//! Vandermonde quasideterminants, Bezout and Vieta, symmetric functions.

use rand_chacha::ChaCha8Rng;

use super::*;
use crate::linalg::DenseQ;
use crate::scalar::TruncRing;
use crate::symmfn::{
    bezout_product, coeffs_from_roots, complete_by_series, complete_by_words, compositions, elementary_lambda,
    hat_transform, lambda_monomial, ribbon_schur, vandermonde, vieta_coeffs_from_y, vieta_coeffs_via_qdet,
    y_transform, z_transform, CentralPoly,
};

const MODULE: &str = "symmfn";

fn sample_points(ctx: &Ctx, rng: &mut ChaCha8Rng, extra: usize) -> Assignment {
    let ring = ctx.ring();
    let mut pt = Assignment::new();
    pt.put_list(&ring, "x", &super::super::random_list(ctx, rng, ctx.n));
    pt.put_list(&ring, "z", &super::super::random_list(ctx, rng, extra));
    pt
}

fn xs_z(ctx: &Ctx, pt: &Assignment) -> Result<(MatRing, Vec<QMat>, Vec<QMat>)> {
    let r = ctx.ring();
    let xs = pt.get_list(&r, "x")?;
    let zs = pt.get_list(&r, "z")?;
    Ok((r, xs, zs))
}

/// `V(x_1, .., x_n, z)`.
fn v_with(r: &MatRing, xs: &[QMat], z: &QMat) -> Result<QMat> {
    let mut pts = xs.to_vec();
    pts.push(z.clone());
    vandermonde(r, &pts, AUTO)
}

/// Reject points where the sequence is not independent.
fn independent(r: &MatRing, xs: &[QMat]) -> Result<()> {
    if crate::symmfn::is_independent(r, xs, AUTO) {
        Ok(())
    } else {
        Err(Error::domain("dependent sequence"))
    }
}

pub(super) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Compare `f(y(x))` with `f(y(x_sigma))` for every permutation `sigma`.
pub(super) fn symmetric_under_all(
    ctx: &Ctx,
    pt: &Assignment,
    f: impl Fn(&MatRing, &[QMat]) -> Result<Vec<QMat>>,
) -> Result<Sides> {
    let (r, xs, _) = xs_z(ctx, pt)?;
    let base = f(&r, &y_transform(&r, &xs, AUTO)?)?;
    let mut s = Sides::new();
    for sigma in permutations(xs.len()) {
        let permuted: Vec<QMat> = sigma.iter().map(|&i| xs[i].clone()).collect();
        let values = f(&r, &y_transform(&r, &permuted, AUTO)?)?;
        for (a, b) in values.iter().zip(&base) {
            s.push(&r, a, b);
        }
    }
    Ok(s)
}

pub(super) fn sample_sym(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
    sample_points(ctx, rng, 0)
}

pub(super) fn entries() -> Vec<Entry> {
    vec![
        def(
            "Y-TRANSFORM",
            "Sec III.1.1",
            "In the commutative case $y_k = x_k$",
            MODULE,
            &["y_transform", "z_transform", "vandermonde"],
            &[1, 2, 3, 4],
            |ctx, rng| sample_points(ctx, rng, 1),
            |ctx, pt| {
                let (r, xs, zs) = xs_z(ctx, pt)?;
                let mut s = Sides::new();
                for (y, x) in y_transform(&r, &xs, AUTO)?.iter().zip(&xs) {
                    s.push(&r, y, x);
                }
                for zk in z_transform(&r, &xs, &zs[0], AUTO)? {
                    s.push(&r, &zk, &zs[0]);
                }
                s.push(&r, &v_with(&r, &xs[..1], &zs[0])?, &r.sub(&zs[0], &xs[0]));
                Ok(s)
            },
        )
        .fixed_dims(&[1]),
        def(
            "HAT-LEMMA",
            "Lemma 3.1.3",
            "$\\hat z =(z-x_1) z(z-x_1)^{-1}$",
            MODULE,
            &["vandermonde", "hat_transform"],
            &[2, 3, 4],
            |ctx, rng| sample_points(ctx, rng, 1),
            |ctx, pt| {
                let (r, xs, zs) = xs_z(ctx, pt)?;
                let z = &zs[0];
                let (xh, zh) = hat_transform(&r, &xs, z)?;
                let rhs = r.mul(&v_with(&r, &xh, &zh)?, &r.sub(z, &xs[0]));
                Ok(Sides::one(&r, &v_with(&r, &xs, z)?, &rhs))
            },
        ),
        def(
            "BEZOUT",
            "Thm 3.1.1",
            "Bezout decomposition of a Vandermonde",
            MODULE,
            &["vandermonde", "bezout_product"],
            &[1, 2, 3, 4],
            |ctx, rng| sample_points(ctx, rng, 10),
            |ctx, pt| {
                let (r, xs, zs) = xs_z(ctx, pt)?;
                independent(&r, &xs)?;
                let mut s = Sides::new();
                for z in &zs {
                    let mut with_z = xs[..xs.len() - 1].to_vec();
                    with_z.push(z.clone());
                    independent(&r, &with_z)?;
                    s.push(&r, &v_with(&r, &xs, z)?, &bezout_product(&r, &xs, z, AUTO)?);
                }
                Ok(s)
            },
        ),
        def(
            "BEZOUT-THM",
            "Thm 3.2.2",
            "(Noncommutative Bezout Theorem)",
            MODULE,
            &["coeffs_from_roots", "bezout_product"],
            &[1, 2, 3, 4],
            |ctx, rng| sample_points(ctx, rng, 3),
            |ctx, pt| {
                let (r, xs, zs) = xs_z(ctx, pt)?;
                independent(&r, &xs)?;
                let poly = CentralPoly::monic(&r, &coeffs_from_roots(&r, &xs, AUTO)?);
                let mut s = Sides::new();
                for z in &zs {
                    s.push(&r, &poly.eval(&r, z), &bezout_product(&r, &xs, z, AUTO)?);
                }
                Ok(s)
            },
        ),
        def(
            "VIETA-33",
            "Thm 3.1.2",
            "Vieta decomposition of a Vandermonde",
            MODULE,
            &["vandermonde", "y_transform", "vieta_coeffs_from_y"],
            &[1, 2, 3, 4],
            |ctx, rng| sample_points(ctx, rng, 1),
            |ctx, pt| {
                let (r, xs, zs) = xs_z(ctx, pt)?;
                let mut all = xs.clone();
                all.push(zs[0].clone());
                independent(&r, &all)?;
                let poly = CentralPoly::monic(&r, &vieta_coeffs_from_y(&r, &y_transform(&r, &xs, AUTO)?));
                Ok(Sides::one(&r, &v_with(&r, &xs, &zs[0])?, &poly.eval(&r, &zs[0])))
            },
        ),
        def(
            "VIETA-35",
            "Thm 3.1.4",
            "Another expression for coefficients",
            MODULE,
            &["vieta_coeffs_via_qdet", "vieta_coeffs_from_y"],
            &[1, 2, 3, 4],
            sample_sym,
            |ctx, pt| {
                let (r, xs, _) = xs_z(ctx, pt)?;
                independent(&r, &xs)?;
                let via = vieta_coeffs_via_qdet(&r, &xs, AUTO)?;
                let from_y = vieta_coeffs_from_y(&r, &y_transform(&r, &xs, AUTO)?);
                let mut s = Sides::new();
                for (a, b) in via.iter().zip(&from_y) {
                    s.push(&r, a, b);
                }
                Ok(s)
            },
        ),
        def(
            "VIETA-CRAMER",
            "Thm 3.2.3",
            "(Noncommutative Vieta Theorem)",
            MODULE,
            &["coeffs_from_roots", "vieta_coeffs_from_y"],
            &[1, 2, 3, 4],
            sample_sym,
            |ctx, pt| {
                let (r, xs, _) = xs_z(ctx, pt)?;
                independent(&r, &xs)?;
                let cramer = coeffs_from_roots(&r, &xs, AUTO)?;
                let from_y = vieta_coeffs_from_y(&r, &y_transform(&r, &xs, AUTO)?);
                let mut s = Sides::new();
                for (a, b) in cramer.iter().zip(&from_y) {
                    s.push(&r, a, b);
                }
                Ok(s)
            },
        ),
        def(
            "ROOT-ANNIHILATION",
            "Lemma 3.2.1",
            "independent set of roots of the equation",
            MODULE,
            &["vieta_coeffs_from_y", "CentralPoly::eval"],
            &[1, 2, 3, 4],
            sample_sym,
            |ctx, pt| {
                let (r, xs, _) = xs_z(ctx, pt)?;
                independent(&r, &xs)?;
                let poly = CentralPoly::monic(&r, &vieta_coeffs_from_y(&r, &y_transform(&r, &xs, AUTO)?));
                let mut s = Sides::new();
                for x in &xs {
                    s.push(&r, &poly.eval(&r, x), &r.zero());
                }
                Ok(s)
            },
        ),
        def(
            "LAMBDA-SYMMETRY",
            "Prop 3.3.2",
            "are symmetric in $x_1, \\dots, x_n$",
            MODULE,
            &["elementary_lambda", "y_transform"],
            &[2, 3],
            sample_sym,
            |ctx, pt| symmetric_under_all(ctx, pt, |r, ys| Ok(elementary_lambda(r, ys))),
        )
        .dims(&[1, 2]),
        def(
            "S-SYMMETRY",
            "Prop 3.3.3",
            "$S_k(x_1,\\dots, x_n)$ are symmetric",
            MODULE,
            &["complete_by_words", "y_transform"],
            &[2, 3],
            sample_sym,
            |ctx, pt| symmetric_under_all(ctx, pt, |r, ys| Ok(complete_by_words(r, ys, 3))),
        )
        .dims(&[1, 2]),
        def(
            "RIBBON-SYMMETRY",
            "Thm 3.3.4",
            "symmetric in $x_1,\\dots, x_n$ for any $J$",
            MODULE,
            &["ribbon_schur", "y_transform"],
            &[2, 3],
            sample_sym,
            |ctx, pt| {
                symmetric_under_all(ctx, pt, |r, ys| {
                    (1..=3).flat_map(compositions).map(|j| ribbon_schur(r, ys, &j)).collect()
                })
            },
        )
        .dims(&[1, 2]),
        def(
            "S-ROUTES",
            "Eq 3.7",
            "complete symmetric functions of $x_1,\\dots ,x_n$",
            MODULE,
            &["complete_by_series", "complete_by_words"],
            &[1, 2, 3],
            sample_sym,
            |ctx, pt| {
                let (r, xs, _) = xs_z(ctx, pt)?;
                let ys = y_transform(&r, &xs, AUTO)?;
                let mut s = Sides::new();
                for (a, b) in complete_by_series(&r, &ys, 5)?.iter().zip(&complete_by_words(&r, &ys, 5)) {
                    s.push(&r, a, b);
                }
                Ok(s)
            },
        ),
        def(
            "RIBBON-BASIS",
            "Thm 3.3.5",
            "is a $\\Bbb Q$-linear basis",
            MODULE,
            &["ribbon_schur", "lambda_monomial"],
            &[2, 3, 4],
            |ctx, rng| {
                let ring = ctx.ring();
                let sets = 1usize << (ctx.n - 1);
                let mut pt = Assignment::new();
                for k in 0..sets {
                    pt.put_list(&ring, &format!("x{k}"), &super::super::random_list(ctx, rng, ctx.n));
                }
                pt.put_index("sets", sets);
                pt
            },
            eval_ribbon_basis,
        )
        .fixed_dims(&[2])
        .samples(3),
        def(
            "DERIVATION",
            "Sec III.3.1 Remark",
            "Consider, however,",
            MODULE,
            &["vandermonde", "y_transform"],
            &[2, 3, 4],
            sample_sym,
            |ctx, pt| {
                let (base, xs, _) = xs_z(ctx, pt)?;
                let r = TruncRing::new(base.clone(), 1);
                let shifted: Vec<Vec<QMat>> = xs.iter().map(|x| r.linear(x.clone(), base.one())).collect();
                let mut s = Sides::new();
                for k in 2..=xs.len() {
                    let v = vandermonde(&r, &shifted[..k], AUTO)?;
                    s.push(&base, r.coefficient(&v, 1), &base.zero());
                }
                for y in y_transform(&r, &shifted, AUTO)? {
                    s.push(&base, r.coefficient(&y, 1), &base.one());
                }
                Ok(s)
            },
        ),
    ]
}

/// Each function becomes a row of its flattened values over all point sets.
/// The ribbon rows must have full rank `2^{m-1}`, and adding any Λ-monomial
/// row must not raise it.
fn eval_ribbon_basis(ctx: &Ctx, pt: &Assignment) -> Result<Sides> {
    let r = ctx.ring();
    let m = ctx.n;
    let sets = pt.index("sets")?;
    let mut ys = Vec::with_capacity(sets);
    for k in 0..sets {
        ys.push(y_transform(&r, &pt.get_list(&r, &format!("x{k}"))?, AUTO)?);
    }
    let row = |f: &dyn Fn(&[QMat]) -> Result<QMat>| -> Result<Vec<num_rational::BigRational>> {
        let mut v = Vec::new();
        for y in &ys {
            v.extend(f(y)?.dense().data().iter().cloned());
        }
        Ok(v)
    };
    let comps = compositions(m);
    let mut ribbons = Vec::new();
    for j in &comps {
        ribbons.push(row(&|y| ribbon_schur(&r, y, j))?);
    }
    let rank = |rows: &[Vec<num_rational::BigRational>]| {
        DenseQ::from_fn(rows.len(), rows[0].len(), |i, c| rows[i][c].clone()).rank()
    };
    let full = comps.len();
    let mut s = Sides::new();
    s.push_value(rank(&ribbons), full);
    for j in &comps {
        let mut with = ribbons.clone();
        with.push(row(&|y| Ok(lambda_monomial(&r, y, j)))?);
        s.push_value(rank(&with), full);
    }
    Ok(s)
}

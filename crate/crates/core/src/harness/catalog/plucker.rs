//! Quasi-Plücker coordinates, Gauss decomposition and flag coordinates.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::pluecker::{
    complement, embed, expansion_p, expansion_r, flag_coordinate, gauss_decompose, kernel_complement, left_qpc,
    normal_form, qpc_normal_form, right_qpc, Pivot,
};
use crate::quasidet::matrix_inverse;
use crate::scalar::SampleRing;

const MODULE: &str = "pluecker";

fn p(r: &MatRing, a: &NcMatrix<QMat>, i: usize, j: usize, set: &[usize]) -> Result<QMat> {
    left_qpc(r, a, i, j, set, Pivot::Auto, AUTO)
}

fn rq(r: &MatRing, b: &NcMatrix<QMat>, i: usize, j: usize, set: &[usize]) -> Result<QMat> {
    right_qpc(r, b, i, j, set, Pivot::Auto, AUTO)
}

pub(super) fn entries() -> Vec<Entry> {
    vec![
        def(
            "QPC-GENERATING",
            "Sec II.1.2 i-iii",
            "$p^I_{ij} \\cdot p^I_{jk} = p^I_{ik}$",
            MODULE,
            &["left_qpc"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let k = rng.gen_range(1..n);
                let mut pt = super::super::point_with_matrix(ctx, rng, k, n);
                let set = subset(rng, n, k - 1, &[]);
                let i = idx_except(rng, n, &set);
                let j = idx_except(rng, n, &set);
                pt.put_indices("I", &set);
                pt.put_indices("I_shuffled", &shuffled(rng, &set));
                pt.put_index("i", i);
                pt.put_index("j", j);
                pt.put_index("m", idx(rng, n));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (set, sh) = (pt.indices("I")?, pt.indices("I_shuffled")?);
                let (i, j, m) = (pt.index("i")?, pt.index("j")?, pt.index("m")?);
                let mut s = Sides::new();
                s.push(&r, &p(&r, &a, i, m, &sh)?, &p(&r, &a, i, m, &set)?);
                for &x in &set {
                    s.push(&r, &p(&r, &a, i, x, &set)?, &r.zero());
                }
                s.push(&r, &p(&r, &a, i, i, &set)?, &r.one());
                s.push(&r, &r.mul(&p(&r, &a, i, j, &set)?, &p(&r, &a, j, m, &set)?), &p(&r, &a, i, m, &set)?);
                Ok(s)
            },
        ),
        def(
            "QPC-S-INDEPENDENCE",
            "Prop 2.1.1 i",
            "does not depend of $s$",
            MODULE,
            &["left_qpc"],
            &[2, 3, 4, 5],
            sample_left,
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (set, i, j) = (pt.indices("I")?, pt.index("i")?, pt.index("j")?);
                let first = left_qpc(&r, &a, i, j, &set, Pivot::Fixed(1), AUTO)?;
                let mut s = Sides::new();
                for t in 2..=a.nrows() {
                    s.push(&r, &left_qpc(&r, &a, i, j, &set, Pivot::Fixed(t), AUTO)?, &first);
                }
                s.push(&r, &p(&r, &a, i, j, &set)?, &first);
                Ok(s)
            },
        ),
        def(
            "QPC-T-INDEPENDENCE",
            "Prop 2.1.7 i",
            "does not depend of $t$",
            MODULE,
            &["right_qpc"],
            &[2, 3, 4, 5],
            sample_right,
            |ctx, pt| {
                let (r, b) = (ctx.ring(), mat(ctx, pt, "B")?);
                let (set, i, j) = (pt.indices("I")?, pt.index("i")?, pt.index("j")?);
                let first = right_qpc(&r, &b, i, j, &set, Pivot::Fixed(1), AUTO)?;
                let mut s = Sides::new();
                for t in 2..=b.ncols() {
                    s.push(&r, &right_qpc(&r, &b, i, j, &set, Pivot::Fixed(t), AUTO)?, &first);
                }
                s.push(&r, &rq(&r, &b, i, j, &set)?, &first);
                Ok(s)
            },
        ),
        def(
            "QPC-GAUGE-LEFT",
            "Prop 2.1.1 ii",
            "for any invertible $k\\times k$ matrix $g$",
            MODULE,
            &["left_qpc"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let mut pt = sample_left(ctx, rng);
                let k = pt.index("k").unwrap_or(1);
                put_random(ctx, rng, &mut pt, "g", k, k);
                pt
            },
            |ctx, pt| {
                let (r, a, g) = (ctx.ring(), mat(ctx, pt, "A")?, mat(ctx, pt, "g")?);
                matrix_inverse(&r, &g)?;
                let (set, i, j) = (pt.indices("I")?, pt.index("i")?, pt.index("j")?);
                let ga = g.mul(&r, &a)?;
                Ok(Sides::one(&r, &p(&r, &ga, i, j, &set)?, &p(&r, &a, i, j, &set)?))
            },
        ),
        def(
            "QPC-GAUGE-RIGHT",
            "Prop 2.1.7 ii",
            "for any invertible $k\\times k$-matrix",
            MODULE,
            &["right_qpc"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let mut pt = sample_right(ctx, rng);
                let k = pt.index("k").unwrap_or(1);
                put_random(ctx, rng, &mut pt, "g", k, k);
                pt
            },
            |ctx, pt| {
                let (r, b, g) = (ctx.ring(), mat(ctx, pt, "B")?, mat(ctx, pt, "g")?);
                matrix_inverse(&r, &g)?;
                let (set, i, j) = (pt.indices("I")?, pt.index("i")?, pt.index("j")?);
                let bg = b.mul(&r, &g)?;
                Ok(Sides::one(&r, &rq(&r, &bg, i, j, &set)?, &rq(&r, &b, i, j, &set)?))
            },
        ),
        def(
            "QPC-SKEW-SYMMETRY",
            "Prop 2.1.3",
            "(Skew-Symmetry)",
            MODULE,
            &["left_qpc"],
            &[3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let k = rng.gen_range(2..n);
                let mut pt = super::super::point_with_matrix(ctx, rng, k, n);
                let set = random_order(rng, n, k + 1);
                pt.put_indices("N", &set);
                pt.put_indices("ijm", &set[..3]);
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let big = pt.indices("N")?;
                let t = pt.indices("ijm")?;
                let (i, j, m) = (t[0], t[1], t[2]);
                let without = |x: usize, y: usize| big.iter().copied().filter(|&z| z != x && z != y).collect::<Vec<_>>();
                let prod = r.product(&[
                    p(&r, &a, i, j, &without(i, j))?,
                    p(&r, &a, j, m, &without(j, m))?,
                    p(&r, &a, m, i, &without(m, i))?,
                ]);
                Ok(Sides::one(&r, &prod, &r.neg(&r.one())))
            },
        ),
        def(
            "PLUECKER-REL",
            "Prop 2.1.4",
            "(Pl\\\"ucker relations)",
            MODULE,
            &["left_qpc"],
            &[2, 3, 4, 5, 6],
            |ctx, rng| {
                let n = ctx.n;
                let k = rng.gen_range(1..n);
                let mut pt = super::super::point_with_matrix(ctx, rng, k, n);
                let m_set = subset(rng, n, k - 1, &[]);
                pt.put_indices("M", &m_set);
                pt.put_indices("L", &subset(rng, n, k, &[]));
                pt.put_index("i", idx_except(rng, n, &m_set));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (m_set, l_set, i) = (pt.indices("M")?, pt.indices("L")?, pt.index("i")?);
                let mut sum = r.zero();
                for &j in &l_set {
                    let rest: Vec<usize> = l_set.iter().copied().filter(|&x| x != j).collect();
                    sum = r.add(&sum, &r.mul(&p(&r, &a, i, j, &m_set)?, &p(&r, &a, j, i, &rest)?));
                }
                Ok(Sides::one(&r, &sum, &r.one()))
            },
        ),
        def(
            "LEMMA-EMBED",
            "Lemma 2.1.5",
            "Let $j< k< i$",
            MODULE,
            &["left_qpc", "qdet"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let k = rng.gen_range(1..n);
                let mut pt = super::super::point_with_matrix(ctx, rng, k, n);
                pt.put_index("j", idx(rng, k));
                pt.put_index("i", k + idx(rng, n - k));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (i, j) = (pt.index("i")?, pt.index("j")?);
                let x = embed(&r, &a);
                let set = complement(a.nrows(), &[j]);
                Ok(Sides::one(&r, &qd(&r, &x, i, j)?, &r.neg(&p(&r, &a, i, j, &set)?)))
            },
        ),
        def(
            "NORMAL-FORM",
            "Thm 2.1.6",
            "By invariance we have",
            MODULE,
            &["normal_form", "qpc_normal_form"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let k = rng.gen_range(1..n);
                let mut pt = super::super::point_with_matrix(ctx, rng, k, n);
                put_random(ctx, rng, &mut pt, "g", k, k);
                pt
            },
            |ctx, pt| {
                let (r, a, g) = (ctx.ring(), mat(ctx, pt, "A")?, mat(ctx, pt, "g")?);
                matrix_inverse(&r, &g)?;
                let (c, _) = normal_form(&r, &a)?;
                let mut s = Sides::new();
                s.push_matrix(&r, &c, &qpc_normal_form(&r, &a, AUTO)?)?;
                let (cg, _) = normal_form(&r, &g.mul(&r, &a)?)?;
                s.push_matrix(&r, &cg, &c)?;
                Ok(s)
            },
        ),
        def(
            "INVERSE-TIMES-BLOCK",
            "Prop 2.2.4",
            "Let matrix $B$ is invertible",
            MODULE,
            &["left_qpc", "matrix_inverse"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let m = ctx.n;
                let n = rng.gen_range(1..m);
                super::super::point_with_matrix(ctx, rng, n, m)
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (n, m) = (a.nrows(), a.ncols());
                let rows: Vec<usize> = (1..=n).collect();
                let b = a.select(&rows, &rows)?;
                let c = a.select(&rows, &(n + 1..=m).collect::<Vec<_>>())?;
                let lhs = matrix_inverse(&r, &b)?.mul(&r, &c)?;
                let mut s = Sides::new();
                for i in 1..=n {
                    for k in n + 1..=m {
                        s.push(&r, lhs.at(i - 1, k - n - 1), &p(&r, &a, i, k, &complement(n, &[i]))?);
                    }
                }
                Ok(s)
            },
        ),
        def(
            "QPC-DUALITY",
            "Thm 2.1.9",
            "Suppose that $AB=0$",
            MODULE,
            &["left_qpc", "right_qpc", "kernel_complement"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let k = rng.gen_range(1..n);
                let mut pt = super::super::point_with_matrix(ctx, rng, k, n);
                let set = subset(rng, n, k - 1, &[]);
                let i = idx_except(rng, n, &set);
                let mut not = set.clone();
                not.push(i);
                pt.put_indices("I", &set);
                pt.put_index("i", i);
                pt.put_index("j", idx_except(rng, n, &not));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (set, i, j) = (pt.indices("I")?, pt.index("i")?, pt.index("j")?);
                let b = kernel_complement(&r, &a).ok_or_else(|| Error::domain("kernel of unexpected dimension"))?;
                let n = a.ncols();
                let mut not = set.clone();
                not.extend([i, j]);
                let dual = complement(n, &not);
                let mut s = Sides::new();
                s.push_matrix(&r, &a.mul(&r, &b)?, &NcMatrix::zeros(&r, a.nrows(), b.ncols()))?;
                s.push(&r, &r.add(&p(&r, &a, i, j, &set)?, &rq(&r, &b, i, j, &dual)?), &r.zero());
                Ok(s)
            },
        ),
        def(
            "QPC-K-STEP",
            "Prop 2.1.10",
            "for different k",
            MODULE,
            &["left_qpc"],
            &[3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let k = rng.gen_range(2..n);
                let mut pt = super::super::point_with_matrix(ctx, rng, k, n);
                let set = subset(rng, n, k - 2, &[]);
                let i = idx_except(rng, n, &set);
                let mut not = set.clone();
                not.push(i);
                pt.put_indices("J", &set);
                pt.put_index("i", i);
                pt.put_index("m", idx_except(rng, n, &not));
                pt.put_index("j", idx(rng, n));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (set, i, m, j) = (pt.indices("J")?, pt.index("i")?, pt.index("m")?, pt.index("j")?);
                let k = a.nrows();
                let head: Vec<usize> = (0..k - 1).collect();
                let all: Vec<usize> = (0..a.ncols()).collect();
                let a1 = a.select_positions(&head, &all);
                let with = |x: usize| {
                    let mut v = set.clone();
                    v.push(x);
                    v
                };
                let rhs = r.add(
                    &p(&r, &a, i, j, &with(m))?,
                    &r.mul(&p(&r, &a1, i, m, &set)?, &p(&r, &a, m, j, &with(i))?),
                );
                Ok(Sides::one(&r, &p(&r, &a1, i, j, &set)?, &rhs))
            },
        ),
        def(
            "QPC-EXPANSION",
            "Prop 2.2.1",
            "Row and column expansion of a",
            MODULE,
            &["expansion_p", "expansion_r", "qdet"],
            &[2, 3, 4, 5],
            sample_square_pivot,
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (al, be) = (pt.index("alpha")?, pt.index("beta")?);
                let n = a.nrows();
                let mut row = a.e(al, be).clone();
                for j in (1..=n).filter(|&j| j != be) {
                    row = r.sub(&row, &r.mul(a.e(al, j), &expansion_p(&r, &a, al, j, be, AUTO)?));
                }
                let mut col = a.e(al, be).clone();
                for i in (1..=n).filter(|&i| i != al) {
                    col = r.sub(&col, &r.mul(&expansion_r(&r, &a, be, al, i, AUTO)?, a.e(i, be)));
                }
                let q = qd(&r, &a, al, be)?;
                let mut s = Sides::one(&r, &row, &q);
                s.push(&r, &col, &q);
                Ok(s)
            },
        ),
        def(
            "QPC-HOMOLOGICAL",
            "Prop 2.2.2",
            "(row relations)",
            MODULE,
            &["expansion_p", "expansion_r", "qdet"],
            &[2, 3, 4, 5],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                let (i, j) = (idx(rng, n), idx(rng, n));
                pt.put_index("i", i);
                pt.put_index("j", j);
                pt.put_index("l", idx_except(rng, n, &[j]));
                pt.put_index("k", idx_except(rng, n, &[i]));
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let [i, j, l, k] = ["i", "j", "l", "k"].map(|x| pt.index(x).unwrap_or(0));
                let row = r.mul(&qd_inv(&r, &a, i, j)?, &qd(&r, &a, i, l)?);
                let col = r.mul(&qd(&r, &a, i, j)?, &qd_inv(&r, &a, k, j)?);
                let mut s = Sides::one(&r, &row, &r.neg(&expansion_p(&r, &a, i, j, l, AUTO)?));
                s.push(&r, &col, &r.neg(&expansion_r(&r, &a, j, i, k, AUTO)?));
                Ok(s)
            },
        ),
        def(
            "QPC-CHAIN",
            "Cor 2.2.3",
            "be sequences of indices such that",
            MODULE,
            &["expansion_p", "expansion_r", "qdet"],
            &[2, 3, 4],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                let walk = |rng: &mut ChaCha8Rng| {
                    let len = rng.gen_range(0..=3);
                    let mut w = vec![idx(rng, n)];
                    for _ in 0..len {
                        let last = *w.last().expect("nonempty");
                        w.push(idx_except(rng, n, &[last]));
                    }
                    w
                };
                let rows = walk(rng);
                let cols = walk(rng);
                pt.put_indices("rows", &rows);
                pt.put_indices("cols", &cols);
                pt
            },
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (rows, cols) = (pt.indices("rows")?, pt.indices("cols")?);
                let (i, j) = (rows[0], cols[0]);
                let (is, jt) = (*rows.last().expect("nonempty"), *cols.last().expect("nonempty"));
                // r factors in descending order of the row walk, column j_t removed.
                let mut factors = Vec::new();
                for w in rows.windows(2).rev() {
                    factors.push(expansion_r(&r, &a, jt, w[1], w[0], AUTO)?);
                }
                factors.push(qd(&r, &a, i, j)?);
                // p factors along the column walk, row i removed.
                for w in cols.windows(2) {
                    factors.push(expansion_p(&r, &a, i, w[0], w[1], AUTO)?);
                }
                let mut rhs = r.product(&factors);
                if (rows.len() + cols.len()) % 2 == 1 {
                    rhs = r.neg(&rhs);
                }
                Ok(Sides::one(&r, &qd(&r, &a, is, jt)?, &rhs))
            },
        ),
        def(
            "QPC-2X2-DISPLAYS",
            "Cor 2.2.3 example",
            "For a matrix $A=\\pmatrix a_{11}&",
            MODULE,
            &["qdet"],
            &[2],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, 2, 2),
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let e = |i, j| a.e(i, j).clone();
                let iv = |i, j| invert(&r, a.e(i, j));
                let a11 = qd(&r, &a, 1, 1)?;
                let first = r.product(&[e(2, 1), iv(1, 1)?, a11.clone(), iv(2, 1)?, e(2, 2)]);
                let second =
                    r.product(&[e(1, 2), iv(2, 2)?, e(2, 1), iv(1, 1)?, a11.clone(), iv(2, 1)?, e(2, 2), iv(1, 2)?, e(1, 1)]);
                let mut s = Sides::one(&r, &first, &qd(&r, &a, 2, 2)?);
                s.push(&r, &second, &a11);
                Ok(s)
            },
        ),
        def(
            "PROD-QPC",
            "Prop 2.2.5",
            "Quasideterminant of a product",
            MODULE,
            &["left_qpc", "right_qpc", "qdet"],
            &[2, 3, 4],
            |ctx, rng| {
                let n = ctx.n;
                let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
                put_random(ctx, rng, &mut pt, "B", n, n);
                pt.put_index("k", idx(rng, n));
                pt
            },
            |ctx, pt| {
                let (r, a, b) = (ctx.ring(), mat(ctx, pt, "A")?, mat(ctx, pt, "B")?);
                let k = pt.index("k")?;
                let n = a.nrows();
                let lhs = r.product(&[qd(&r, &b, k, k)?, qd_inv(&r, &a.mul(&r, &b)?, k, k)?, qd(&r, &a, k, k)?]);
                let a1 = a.delete_sets(&[k], &[])?.normalized();
                let b2 = b.delete_sets(&[], &[k])?.normalized();
                let mut rhs = r.one();
                for al in (1..=n).filter(|&x| x != k) {
                    let set = complement(n, &[al, k]);
                    rhs = r.add(&rhs, &r.mul(&rq(&r, &b2, k, al, &set)?, &p(&r, &a1, al, k, &set)?));
                }
                Ok(Sides::one(&r, &lhs, &rhs))
            },
        ),
        def(
            "GAUSS-DECOMP",
            "Thm 2.2.5 (Gauss decomposition)",
            "Gauss decomposition",
            MODULE,
            &["gauss_decompose"],
            &[1, 2, 3, 4],
            |ctx, rng| super::super::point_with_matrix(ctx, rng, ctx.n, ctx.n),
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (u, y, l) = gauss_decompose(&r, &a, AUTO)?;
                let n = a.nrows();
                let mut s = Sides::new();
                s.push_matrix(&r, &u.mul(&r, &y)?.mul(&r, &l)?, &a)?;
                for k in 1..=n {
                    let tail: Vec<usize> = (k..=n).collect();
                    s.push(&r, y.e(k, k), &qd(&r, &a.select(&tail, &tail)?, k, k)?);
                    for m in 1..=n {
                        if m != k {
                            let (upper, lower) = if m > k { (u.e(m, k), l.e(k, m)) } else { (l.e(m, k), u.e(k, m)) };
                            s.push(&r, upper, &r.zero());
                            s.push(&r, lower, &r.zero());
                        }
                    }
                    s.push(&r, u.e(k, k), &r.one());
                    s.push(&r, l.e(k, k), &r.one());
                }
                Ok(s)
            },
        ),
        def(
            "FLAG-INVARIANCE",
            "Sec II.2.7 Proposition",
            "do not change under",
            MODULE,
            &["flag_coordinate"],
            &[2, 3, 4, 5],
            |ctx, rng| sample_flag(ctx, rng, false),
            eval_flag,
        ),
        def(
            "FLAG-BRIDGE",
            "Sec II.2.7",
            "It is easy to see that",
            MODULE,
            &["flag_coordinate", "left_qpc"],
            &[2, 3, 4, 5],
            sample_left,
            |ctx, pt| {
                let (r, a) = (ctx.ring(), mat(ctx, pt, "A")?);
                let (set, i, j) = (pt.indices("I")?, pt.index("i")?, pt.index("j")?);
                let f = |x: usize| {
                    let mut cols = vec![x];
                    cols.extend_from_slice(&set);
                    flag_coordinate(&r, &a, &cols, AUTO)
                };
                let rhs = r.mul(&invert(&r, &f(i)?)?, &f(j)?);
                Ok(Sides::one(&r, &p(&r, &a, i, j, &set)?, &rhs))
            },
        ),
    ]
}

/// A `k x n` matrix `A`, `I` of size `k - 1`, `i` outside `I`, any `j`.
fn sample_left(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
    let n = ctx.n;
    let k = rng.gen_range(1..n);
    let mut pt = super::super::point_with_matrix(ctx, rng, k, n);
    let set = subset(rng, n, k - 1, &[]);
    pt.put_index("k", k);
    pt.put_indices("I", &set);
    pt.put_index("i", idx_except(rng, n, &set));
    pt.put_index("j", idx(rng, n));
    pt
}

/// An `n x k` matrix `B`, `I` of size `k - 1`, `j` outside `I`, any `i`.
fn sample_right(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
    let n = ctx.n;
    let k = rng.gen_range(1..n);
    let mut pt = Assignment::new();
    put_random(ctx, rng, &mut pt, "B", n, k);
    let set = subset(rng, n, k - 1, &[]);
    pt.put_index("k", k);
    pt.put_indices("I", &set);
    pt.put_index("j", idx_except(rng, n, &set));
    pt.put_index("i", idx(rng, n));
    pt
}

fn sample_square_pivot(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
    let n = ctx.n;
    let mut pt = super::super::point_with_matrix(ctx, rng, n, n);
    pt.put_index("alpha", idx(rng, n));
    pt.put_index("beta", idx(rng, n));
    pt
}

/// `A` (`k x n`), a unitriangular `g` (lower, or upper when `upper`), and an
/// ordered column list of length `m <= k`.
pub(super) fn sample_flag(ctx: &Ctx, rng: &mut ChaCha8Rng, upper: bool) -> Assignment {
    let n = ctx.n;
    let k = rng.gen_range(if upper { 2 } else { 1 }..n.max(if upper { 3 } else { 2 }));
    let ring = ctx.ring();
    let mut pt = super::super::point_with_matrix(ctx, rng, k, n);
    let g = NcMatrix::from_fn(k, k, |i, j| {
        if i == j {
            ring.one()
        } else if (i > j) != upper {
            ring.sample(rng, &ctx.profile)
        } else {
            ring.zero()
        }
    });
    pt.put_matrix(&ring, "g", &g);
    let m = if upper { rng.gen_range(1..k) } else { idx(rng, k) };
    pt.put_indices("cols", &random_order(rng, n, m));
    pt
}

pub(super) fn eval_flag(ctx: &Ctx, pt: &Assignment) -> Result<Sides> {
    let (r, a, g) = (ctx.ring(), mat(ctx, pt, "A")?, mat(ctx, pt, "g")?);
    let cols = pt.indices("cols")?;
    let ga = g.mul(&r, &a)?;
    Ok(Sides::one(&r, &flag_coordinate(&r, &ga, &cols, AUTO)?, &flag_coordinate(&r, &a, &cols, AUTO)?))
}

//! The identity catalog, one file per module plus negative controls.

mod continued;
mod controls;
mod plucker;
mod quasi;
mod symmetric;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Assignment, Ctx, Entry, Expect, Identity, Info, Sides};
use crate::error::{Error, Result};
use crate::matrix::NcMatrix;
use crate::quasidet::{qdet, Method};
use crate::scalar::{MatRing, QMat, Ring};

type SampleFn = fn(&Ctx, &mut ChaCha8Rng) -> Assignment;
type EvalFn = fn(&Ctx, &Assignment) -> Result<Sides>;

/// Every identity, in a stable order.
pub fn catalog() -> Vec<Box<dyn Identity>> {
    let mut all = Vec::new();
    all.extend(quasi::entries());
    all.extend(plucker::entries());
    all.extend(symmetric::entries());
    all.extend(continued::entries());
    all.extend(controls::entries());
    all.into_iter().map(|e| Box::new(e) as Box<dyn Identity>).collect()
}

pub fn find(id: &str) -> Option<Box<dyn Identity>> {
    catalog().into_iter().find(|e| e.info().id == id)
}

#[allow(clippy::too_many_arguments)]
fn def(
    id: &str,
    reference: &'static str,
    anchor: &'static str,
    module: &'static str,
    ops: &'static [&'static str],
    sizes: &[usize],
    sample: SampleFn,
    eval: EvalFn,
) -> Entry {
    Entry {
        info: Info {
            id: id.to_string(),
            reference,
            anchor,
            module,
            ops,
            sizes: sizes.to_vec(),
            dims: vec![1, 2, 3],
            dims_fixed: false,
            max_samples: None,
            expect: Expect::Holds,
        },
        sample,
        eval,
    }
}

impl Entry {
    fn dims(mut self, dims: &[usize]) -> Self {
        self.info.dims = dims.to_vec();
        self
    }

    /// Run at exactly these dimensions whatever the run configuration says.
    fn fixed_dims(mut self, dims: &[usize]) -> Self {
        self.info.dims = dims.to_vec();
        self.info.dims_fixed = true;
        self
    }

    fn samples(mut self, max: usize) -> Self {
        self.info.max_samples = Some(max);
        self
    }

    fn fails(mut self) -> Self {
        self.info.expect = Expect::Fails;
        self
    }
}

const AUTO: Method = Method::Auto;

fn idx(rng: &mut ChaCha8Rng, n: usize) -> usize {
    rng.gen_range(1..=n)
}

/// A label in `1..=n` outside `not`; `n` must exceed the excluded count.
fn idx_except(rng: &mut ChaCha8Rng, n: usize, not: &[usize]) -> usize {
    let pool: Vec<usize> = (1..=n).filter(|x| !not.contains(x)).collect();
    *pool.choose(rng).expect("nonempty pool")
}

/// A sorted random `k`-subset of `[1, n]` avoiding `not`.
fn subset(rng: &mut ChaCha8Rng, n: usize, k: usize, not: &[usize]) -> Vec<usize> {
    let pool: Vec<usize> = (1..=n).filter(|x| !not.contains(x)).collect();
    let mut s: Vec<usize> = pool.choose_multiple(rng, k).copied().collect();
    s.sort_unstable();
    s
}

fn shuffled(rng: &mut ChaCha8Rng, v: &[usize]) -> Vec<usize> {
    let mut w = v.to_vec();
    w.shuffle(rng);
    w
}

/// A `k`-subset of `[1, n]` in random order.
fn random_order(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let s = subset(rng, n, k, &[]);
    shuffled(rng, &s)
}

fn invert(ring: &MatRing, x: &QMat) -> Result<QMat> {
    ring.try_inv(x).ok_or_else(|| Error::domain("singular scalar"))
}

fn qd(ring: &MatRing, a: &NcMatrix<QMat>, p: usize, q: usize) -> Result<QMat> {
    qdet(ring, a, p, q, AUTO)
}

fn qd_inv(ring: &MatRing, a: &NcMatrix<QMat>, p: usize, q: usize) -> Result<QMat> {
    invert(ring, &qd(ring, a, p, q)?)
}

fn mat(ctx: &Ctx, pt: &Assignment, name: &str) -> Result<NcMatrix<QMat>> {
    pt.get_matrix(&ctx.ring(), name)
}

fn put_random(ctx: &Ctx, rng: &mut ChaCha8Rng, pt: &mut Assignment, name: &str, rows: usize, cols: usize) {
    pt.put_matrix(&ctx.ring(), name, &super::random_matrix(ctx, rng, rows, cols));
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ids_are_unique_and_described() {
        let all = catalog();
        let ids: BTreeSet<String> = all.iter().map(|e| e.info().id.clone()).collect();
        assert_eq!(ids.len(), all.len());
        assert!(all.len() >= 30);
        for e in &all {
            let info = e.info();
            assert!(!info.reference.is_empty() && !info.anchor.is_empty() && !info.ops.is_empty(), "{}", info.id);
            assert!(!info.sizes.is_empty() && !info.dims.is_empty(), "{}", info.id);
        }
    }

    #[test]
    fn lookup_by_id() {
        let s = find("SYLVESTER").expect("present");
        assert_eq!(s.info().reference, "Thm 1.3.1");
        assert_eq!(s.info().anchor, "a pivot for matrix B");
        assert!(find("GAUSS-DECOMP").is_some());
        assert!(find("NO-SUCH-ID").is_none());
    }

    #[test]
    fn negative_controls_exist() {
        let fails = catalog().iter().filter(|e| e.info().expect == Expect::Fails).count();
        assert!(fails >= 3);
    }
}

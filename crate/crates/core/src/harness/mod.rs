//! Randomized verification of identities.
//!
//! An [`Identity`] knows how to draw a random point and how to evaluate both
//! sides there. The runner compares the canonical serializations of the two
//! sides, so a mismatch is an exact, replayable counterexample.

mod catalog;
mod report;
mod runner;

pub use catalog::{catalog, find};
pub use report::{replay, Report, ReplayOutcome, Summary, SCHEMA_VERSION};
pub use runner::{equivalent, run_identities, run_suite, CellVerdict, Counterexample, IdentityVerdict, RunConfig, Status};

use std::collections::BTreeMap;

use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::NcMatrix;
use crate::scalar::{Codec, MatRing, QMat, SampleProfile, SampleRing};

/// What a correct engine must observe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    Holds,
    /// Negative control: a counterexample must be found.
    Fails,
}

/// Static description of an identity.
#[derive(Clone, Debug)]
pub struct Info {
    pub id: String,
    /// Where the statement comes from, as a citation label.
    pub reference: &'static str,
    /// Short quote locating the statement.
    pub anchor: &'static str,
    pub module: &'static str,
    /// Engine operations exercised.
    pub ops: &'static [&'static str],
    pub sizes: Vec<usize>,
    pub dims: Vec<usize>,
    /// When set, `dims` is used as is instead of being intersected with the
    /// run's dimensions (identities whose scalars are not `d x d` matrices).
    pub dims_fixed: bool,
    /// Upper bound on samples per cell for expensive or deterministic checks.
    pub max_samples: Option<usize>,
    pub expect: Expect,
}

/// Parameters of one evaluation cell.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub n: usize,
    pub d: usize,
    pub profile: SampleProfile,
}

impl Ctx {
    pub fn ring(&self) -> MatRing {
        MatRing::new(self.d)
    }
}

pub trait Identity: Send + Sync {
    fn info(&self) -> &Info;
    fn sample(&self, ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment;
    fn evaluate(&self, ctx: &Ctx, point: &Assignment) -> Result<Sides>;
}

/// A catalog identity given by two functions.
pub struct Entry {
    pub info: Info,
    pub sample: fn(&Ctx, &mut ChaCha8Rng) -> Assignment,
    pub eval: fn(&Ctx, &Assignment) -> Result<Sides>,
}

impl Identity for Entry {
    fn info(&self) -> &Info {
        &self.info
    }

    fn sample(&self, ctx: &Ctx, rng: &mut ChaCha8Rng) -> Assignment {
        (self.sample)(ctx, rng)
    }

    fn evaluate(&self, ctx: &Ctx, point: &Assignment) -> Result<Sides> {
        (self.eval)(ctx, point)
    }
}

/// A random point: named scalars, matrices and indices, stored in canonical
/// serialized form so it can be written to a report and replayed.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment(pub BTreeMap<String, Value>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    fn raw(&self, name: &str) -> Result<&Value> {
        self.0.get(name).ok_or_else(|| Error::Unbound(name.to_string()))
    }

    pub fn put<R: Codec>(&mut self, ring: &R, name: &str, v: &R::Elem) {
        self.0.insert(name.to_string(), ring.encode(v));
    }

    pub fn get<R: Codec>(&self, ring: &R, name: &str) -> Result<R::Elem> {
        ring.decode(self.raw(name)?)
    }

    pub fn put_list<R: Codec>(&mut self, ring: &R, name: &str, v: &[R::Elem]) {
        self.0.insert(name.to_string(), Value::Array(v.iter().map(|x| ring.encode(x)).collect()));
    }

    pub fn get_list<R: Codec>(&self, ring: &R, name: &str) -> Result<Vec<R::Elem>> {
        let arr = self.raw(name)?.as_array().ok_or_else(|| Error::invalid(format!("`{name}` is not a list")))?;
        arr.iter().map(|x| ring.decode(x)).collect()
    }

    /// Matrices are stored as nested row arrays; labels are `1..`.
    pub fn put_matrix<R: Codec>(&mut self, ring: &R, name: &str, m: &NcMatrix<R::Elem>) {
        let rows = (0..m.nrows())
            .map(|r| Value::Array((0..m.ncols()).map(|c| ring.encode(m.at(r, c))).collect()))
            .collect();
        self.0.insert(name.to_string(), Value::Array(rows));
    }

    pub fn get_matrix<R: Codec>(&self, ring: &R, name: &str) -> Result<NcMatrix<R::Elem>> {
        let bad = || Error::invalid(format!("`{name}` is not a matrix"));
        let rows = self.raw(name)?.as_array().ok_or_else(bad)?;
        let parsed: Vec<Vec<R::Elem>> = rows
            .iter()
            .map(|r| r.as_array().ok_or_else(bad)?.iter().map(|x| ring.decode(x)).collect())
            .collect::<Result<_>>()?;
        NcMatrix::from_nested(parsed)
    }

    pub fn put_index(&mut self, name: &str, i: usize) {
        self.0.insert(name.to_string(), Value::from(i));
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.raw(name)?
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| Error::invalid(format!("`{name}` is not an index")))
    }

    pub fn put_indices(&mut self, name: &str, v: &[usize]) {
        self.0.insert(name.to_string(), Value::Array(v.iter().map(|&i| Value::from(i)).collect()));
    }

    pub fn indices(&self, name: &str) -> Result<Vec<usize>> {
        let bad = || Error::invalid(format!("`{name}` is not an index list"));
        self.raw(name)?
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_u64().map(|v| v as usize).ok_or_else(bad))
            .collect()
    }
}

/// Both sides of an identity at one point, serialized. The sides are equal
/// exactly when the serializations are.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Sides {
    pub lhs: Vec<Value>,
    pub rhs: Vec<Value>,
}

impl Sides {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn one<R: Codec>(ring: &R, lhs: &R::Elem, rhs: &R::Elem) -> Self {
        let mut s = Self::new();
        s.push(ring, lhs, rhs);
        s
    }

    pub fn push<R: Codec>(&mut self, ring: &R, lhs: &R::Elem, rhs: &R::Elem) {
        self.lhs.push(ring.encode(lhs));
        self.rhs.push(ring.encode(rhs));
    }

    pub fn push_matrix<R: Codec>(&mut self, ring: &R, lhs: &NcMatrix<R::Elem>, rhs: &NcMatrix<R::Elem>) -> Result<()> {
        if (lhs.nrows(), lhs.ncols()) != (rhs.nrows(), rhs.ncols()) {
            return Err(Error::Shape("sides have different shapes".into()));
        }
        for (l, r) in lhs.entries().iter().zip(rhs.entries()) {
            self.push(ring, l, r);
        }
        Ok(())
    }

    /// Non-ring facts (integers, booleans) compared the same way.
    pub fn push_value(&mut self, lhs: impl Into<Value>, rhs: impl Into<Value>) {
        self.lhs.push(lhs.into());
        self.rhs.push(rhs.into());
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Random `n x m` matrix of `d x d` scalars, labels `1..`.
pub fn random_matrix(ctx: &Ctx, rng: &mut ChaCha8Rng, n: usize, m: usize) -> NcMatrix<QMat> {
    let ring = ctx.ring();
    NcMatrix::from_fn(n, m, |_, _| ring.sample(rng, &ctx.profile))
}

pub fn random_scalar(ctx: &Ctx, rng: &mut ChaCha8Rng) -> QMat {
    ctx.ring().sample(rng, &ctx.profile)
}

pub fn random_list(ctx: &Ctx, rng: &mut ChaCha8Rng, k: usize) -> Vec<QMat> {
    (0..k).map(|_| random_scalar(ctx, rng)).collect()
}

/// Shorthand: a point holding one random `rows x cols` matrix named `A`.
pub fn point_with_matrix(ctx: &Ctx, rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Assignment {
    let mut a = Assignment::new();
    a.put_matrix(&ctx.ring(), "A", &random_matrix(ctx, rng, rows, cols));
    a
}

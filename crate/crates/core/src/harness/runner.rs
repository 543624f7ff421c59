use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Assignment, Ctx, Expect, Identity, Info, Sides};
use crate::error::{Error, Result};
use crate::formula::{evaluate, EvalAssignment, RatFormula};
use crate::sample;
use crate::scalar::SampleProfile;

/// Everything that determines a run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    pub dims: Vec<usize>,
    /// Restricts every identity's size range when set.
    pub sizes: Option<Vec<usize>>,
    pub samples: usize,
    pub resample_limit: usize,
    /// Identity IDs to run; empty means all.
    pub only: Vec<String>,
    pub profile: SampleProfile,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0xC0FFEE,
            dims: vec![1, 2, 3],
            sizes: None,
            samples: 20,
            resample_limit: 50,
            only: Vec::new(),
            profile: SampleProfile::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    DomainExhausted,
    Counterexample,
    /// An evaluation failed for a reason other than a missing inverse.
    Error,
}

/// A point where the two sides differ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub d: usize,
    pub sample_index: usize,
    pub attempt: usize,
    pub assignment: Assignment,
    pub lhs: Vec<Value>,
    pub rhs: Vec<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellVerdict {
    pub n: usize,
    pub d: usize,
    pub status: Status,
    pub samples_attempted: usize,
    pub samples_succeeded: usize,
    /// Evaluations rejected because the point was outside the domain.
    pub resamples: usize,
    pub exhausted_slots: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityVerdict {
    pub id: String,
    pub reference: String,
    pub anchor: String,
    pub expect: Expect,
    pub status: Status,
    /// Whether the outcome is the expected one: Verified for identities,
    /// a counterexample for negative controls.
    pub passed: bool,
    pub seed: u64,
    pub samples_attempted: usize,
    pub samples_succeeded: usize,
    pub cells: Vec<CellVerdict>,
}

impl IdentityVerdict {
    pub fn counterexamples(&self) -> impl Iterator<Item = &Counterexample> {
        self.cells.iter().filter_map(|c| c.counterexample.as_ref())
    }
}

fn cells_of(info: &Info, config: &RunConfig) -> Vec<(usize, usize)> {
    let dims: Vec<usize> = if info.dims_fixed {
        info.dims.clone()
    } else {
        info.dims.iter().copied().filter(|d| config.dims.contains(d)).collect()
    };
    let sizes: Vec<usize> = match &config.sizes {
        Some(s) => info.sizes.iter().copied().filter(|n| s.contains(n)).collect(),
        None => info.sizes.clone(),
    };
    sizes.iter().flat_map(|&n| dims.iter().map(move |&d| (n, d))).collect()
}

/// Label of the random streams of an identity.
fn stream_label(info: &Info) -> &str {
    &info.id
}

fn run_cell(ident: &dyn Identity, config: &RunConfig, n: usize, d: usize) -> CellVerdict {
    let info = ident.info();
    let ctx = Ctx { n, d, profile: config.profile };
    let samples = info.max_samples.map_or(config.samples, |m| m.min(config.samples)).max(1);
    let mut cell = CellVerdict {
        n,
        d,
        status: Status::Verified,
        samples_attempted: 0,
        samples_succeeded: 0,
        resamples: 0,
        exhausted_slots: 0,
        counterexample: None,
        error: None,
    };
    'slots: for k in 0..samples {
        cell.samples_attempted += 1;
        let mut rng = sample::stream(config.seed, stream_label(info), n, d, k);
        for attempt in 0..config.resample_limit.max(1) {
            let point = ident.sample(&ctx, &mut rng);
            match ident.evaluate(&ctx, &point) {
                Ok(sides) if sides.holds() => {
                    cell.samples_succeeded += 1;
                    continue 'slots;
                }
                Ok(sides) => {
                    cell.samples_succeeded += 1;
                    cell.status = Status::Counterexample;
                    cell.counterexample = Some(Counterexample {
                        n,
                        d,
                        sample_index: k,
                        attempt,
                        assignment: point,
                        lhs: sides.lhs,
                        rhs: sides.rhs,
                    });
                    return cell;
                }
                Err(e) if e.is_domain() => cell.resamples += 1,
                Err(e) => {
                    cell.status = Status::Error;
                    cell.error = Some(e.to_string());
                    return cell;
                }
            }
        }
        cell.exhausted_slots += 1;
        cell.status = Status::DomainExhausted;
    }
    cell
}

/// Run the given identities. Cells run in parallel; the result does not
/// depend on scheduling.
pub fn run_identities(identities: &[&dyn Identity], config: &RunConfig) -> (Vec<IdentityVerdict>, Vec<(String, f64)>) {
    let jobs: Vec<(usize, usize, usize)> = identities
        .iter()
        .enumerate()
        .flat_map(|(i, id)| cells_of(id.info(), config).into_iter().map(move |(n, d)| (i, n, d)))
        .collect();
    let cells: Vec<(usize, CellVerdict, f64)> = jobs
        .par_iter()
        .map(|&(i, n, d)| {
            let start = Instant::now();
            let cell = run_cell(identities[i], config, n, d);
            (i, cell, start.elapsed().as_secs_f64())
        })
        .collect();
    let mut verdicts = Vec::with_capacity(identities.len());
    let mut timing = Vec::with_capacity(identities.len());
    for (i, ident) in identities.iter().enumerate() {
        let info = ident.info();
        let mine: Vec<&(usize, CellVerdict, f64)> = cells.iter().filter(|c| c.0 == i).collect();
        let cells: Vec<CellVerdict> = mine.iter().map(|c| c.1.clone()).collect();
        let status = cells.iter().map(|c| c.status).max().unwrap_or(Status::Verified);
        let passed = match info.expect {
            Expect::Holds => !cells.is_empty() && status == Status::Verified,
            Expect::Fails => cells.iter().any(|c| c.status == Status::Counterexample) && status != Status::Error,
        };
        timing.push((info.id.clone(), mine.iter().map(|c| c.2).sum()));
        verdicts.push(IdentityVerdict {
            id: info.id.clone(),
            reference: info.reference.to_string(),
            anchor: info.anchor.to_string(),
            expect: info.expect,
            status,
            passed,
            seed: config.seed,
            samples_attempted: cells.iter().map(|c| c.samples_attempted).sum(),
            samples_succeeded: cells.iter().map(|c| c.samples_succeeded).sum(),
            cells,
        });
    }
    (verdicts, timing)
}

/// Run the catalog (or the `only` subset of it).
pub fn run_suite(config: &RunConfig) -> Result<super::Report> {
    let all = super::catalog();
    for id in &config.only {
        if !all.iter().any(|e| e.info().id == *id) {
            return Err(Error::invalid(format!("unknown identity `{id}`")));
        }
    }
    let chosen: Vec<&dyn Identity> = all
        .iter()
        .filter(|e| config.only.is_empty() || config.only.contains(&e.info().id))
        .map(|e| e.as_ref())
        .collect();
    let start = Instant::now();
    let (verdicts, per_identity) = run_identities(&chosen, config);
    Ok(super::Report::new(config.clone(), verdicts, start.elapsed().as_secs_f64(), per_identity))
}

/// Equality of two formulas on their common domain, tested at random
/// `d x d` rational matrix points.
struct FormulaPair {
    info: Info,
    f: RatFormula,
    g: RatFormula,
    vars: Vec<String>,
}

impl Identity for FormulaPair {
    fn info(&self) -> &Info {
        &self.info
    }

    fn sample(&self, ctx: &Ctx, rng: &mut rand_chacha::ChaCha8Rng) -> Assignment {
        let ring = ctx.ring();
        let sigma = sample::sample_assignment(&self.vars, &ring, rng, &ctx.profile);
        let mut a = Assignment::new();
        for (k, v) in &sigma {
            a.put(&ring, k, v);
        }
        a
    }

    fn evaluate(&self, ctx: &Ctx, point: &Assignment) -> Result<Sides> {
        let ring = ctx.ring();
        let sigma: EvalAssignment<_> =
            self.vars.iter().map(|v| Ok((v.clone(), point.get(&ring, v)?))).collect::<Result<_>>()?;
        let l = evaluate(&self.f, &sigma, &ring)?;
        let r = evaluate(&self.g, &sigma, &ring)?;
        Ok(Sides::one(&ring, &l, &r))
    }
}

/// Decide `f = g` by sampling; the verdict is Verified, Counterexample or
/// DomainExhausted.
pub fn equivalent(f: &RatFormula, g: &RatFormula, config: &RunConfig) -> IdentityVerdict {
    let vars: Vec<String> = f.vars().union(&g.vars()).cloned().collect();
    let pair = FormulaPair {
        info: Info {
            id: format!("EQUIV({f} = {g})"),
            reference: "formula equivalence",
            anchor: "same value at each point of the common domain",
            module: "core",
            ops: &["evaluate", "equivalent"],
            sizes: vec![0],
            dims: config.dims.clone(),
            dims_fixed: true,
            max_samples: None,
            expect: Expect::Holds,
        },
        f: f.clone(),
        g: g.clone(),
        vars,
    };
    let (mut v, _) = run_identities(&[&pair], config);
    v.remove(0)
}

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::runner::{IdentityVerdict, RunConfig, Status};
use super::Ctx;
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub identities: usize,
    pub passed: usize,
    pub failed: usize,
    pub verified_cells: usize,
    pub counterexample_cells: usize,
    pub domain_exhausted_cells: usize,
    pub error_cells: usize,
    pub exit_code: i32,
}

/// Wall-clock figures, kept apart from everything that must be
/// reproducible.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_clock_seconds: f64,
    pub per_identity_seconds: Vec<(String, f64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    /// Identities are checked by exact evaluation at random points: a
    /// counterexample is certain, a verification is probabilistic.
    pub method: String,
    pub config: RunConfig,
    pub summary: Summary,
    pub verdicts: Vec<IdentityVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn new(config: RunConfig, verdicts: Vec<IdentityVerdict>, wall: f64, per_identity: Vec<(String, f64)>) -> Self {
        let cells = || verdicts.iter().flat_map(|v| v.cells.iter());
        let count = |s: Status| cells().filter(|c| c.status == s).count();
        let failed: Vec<&IdentityVerdict> = verdicts.iter().filter(|v| !v.passed).collect();
        let exit_code = if failed.is_empty() {
            0
        } else if failed.iter().all(|v| v.status == Status::DomainExhausted) {
            2
        } else {
            1
        };
        let summary = Summary {
            identities: verdicts.len(),
            passed: verdicts.len() - failed.len(),
            failed: failed.len(),
            verified_cells: count(Status::Verified),
            counterexample_cells: count(Status::Counterexample),
            domain_exhausted_cells: count(Status::DomainExhausted),
            error_cells: count(Status::Error),
            exit_code,
        };
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            method: "exact evaluation at seeded random rational matrix points; counterexamples are certain, verification is probabilistic".into(),
            config,
            summary,
            verdicts,
            timing: Some(Timing { wall_clock_seconds: wall, per_identity_seconds: per_identity }),
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    pub fn verdict(&self, id: &str) -> Option<&IdentityVerdict> {
        self.verdicts.iter().find(|v| v.id == id)
    }

    /// The report without timing; byte-identical across runs of the same
    /// configuration.
    pub fn deterministic(&self) -> Report {
        Report { timing: None, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: Report = serde_json::from_str(s).map_err(|e| Error::invalid(format!("bad report: {e}")))?;
        if r.schema_version != SCHEMA_VERSION {
            return Err(Error::invalid(format!("unsupported report schema {}", r.schema_version)));
        }
        Ok(r)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReplayOutcome {
    pub id: String,
    pub index: usize,
    pub n: usize,
    pub d: usize,
    /// The recomputed sides equal the stored ones exactly.
    pub reproduced: bool,
    /// The recomputed sides still differ.
    pub still_differs: bool,
    pub lhs: Vec<Value>,
    pub rhs: Vec<Value>,
}

/// Re-evaluate counterexample `index` of identity `id` from a report.
pub fn replay(report: &Report, id: &str, index: usize) -> Result<ReplayOutcome> {
    let verdict = report.verdict(id).ok_or_else(|| Error::invalid(format!("identity `{id}` is not in the report")))?;
    let cx = verdict
        .counterexamples()
        .nth(index)
        .ok_or_else(|| Error::invalid(format!("identity `{id}` has no counterexample #{index}")))?;
    let ident = super::find(id).ok_or_else(|| Error::invalid(format!("unknown identity `{id}`")))?;
    let ctx = Ctx { n: cx.n, d: cx.d, profile: report.config.profile };
    let sides = ident.evaluate(&ctx, &cx.assignment)?;
    Ok(ReplayOutcome {
        id: id.to_string(),
        index,
        n: cx.n,
        d: cx.d,
        reproduced: sides.lhs == cx.lhs && sides.rhs == cx.rhs,
        still_differs: !sides.holds(),
        lhs: sides.lhs,
        rhs: sides.rhs,
    })
}

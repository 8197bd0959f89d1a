use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::groebner::{GbConfig, IdealError};
use crate::poly::MonomialOrder;

use super::checks::{
    check_codim, check_colon_equals, check_geometric_link, check_ideal_equals, check_link, check_mu,
    check_residual_intersection, Mode, Outcome, Status,
};
use super::scenario::{BoundCheck, CheckKind, Expectation, Scenario, FORMAT};
use super::VerifyError;

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq, Hash)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
    /// Necessary conditions hold but the identity itself was not computed.
    Partial,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Error => "error",
            Verdict::Partial => "partial",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub kind: String,
    pub verdict: Verdict,
    pub values: BTreeMap<String, Value>,
    pub millis: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
    pub partial: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub format: u32,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl Report {
    fn from_checks(checks: Vec<CheckReport>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Error => summary.error += 1,
                Verdict::Partial => summary.partial += 1,
            }
        }
        Report { format: FORMAT, checks, summary }
    }

    /// The report with every `millis` field zeroed.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.millis = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0 && self.summary.partial == 0
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub gb: GbConfig,
    /// Worker threads; `0` and `1` both run sequentially.
    pub jobs: usize,
    pub order: Option<MonomialOrder>,
    /// Run containment-only checks as exact ones.
    pub exact: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { gb: GbConfig::default(), jobs: 1, order: None, exact: false }
    }
}

pub fn run_scenario(sc: &Scenario, opts: &RunOptions) -> Result<Report, VerifyError> {
    let prepared = sc.prepare(opts.order)?;
    let run = |c: &BoundCheck| run_check(c, opts);
    let checks: Vec<CheckReport> = if opts.jobs <= 1 {
        prepared.checks.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| VerifyError::Parse(format!("thread pool: {e}")))?;
        pool.install(|| prepared.checks.par_iter().map(run).collect())
    };
    Ok(Report::from_checks(checks))
}

fn evaluate(c: &BoundCheck, mode: Mode, cfg: &GbConfig) -> Result<Outcome, IdealError> {
    let o = &c.operands;
    match (c.kind, c.expect) {
        (CheckKind::ColonEquals, _) => check_colon_equals(&o[0], &o[1], &o[2], mode, cfg),
        (CheckKind::Link, _) => check_link(&o[0], &o[1], &o[2], mode, cfg),
        (CheckKind::GeometricLink, _) => check_geometric_link(&o[0], &o[1], &o[2], cfg),
        (CheckKind::ResidualIntersection, _) => {
            check_residual_intersection(&o[0], &o[1], &o[2], c.s.expect("bound"), mode, cfg)
        }
        (CheckKind::IdealEquals, _) => check_ideal_equals(&o[0], &o[1], cfg),
        (CheckKind::CodimEquals, Expectation::Count(n)) => check_codim(&o[0], n, cfg),
        (CheckKind::MuEquals, Expectation::Count(n)) => check_mu(&o[0], n, cfg),
        _ => unreachable!("expectations are validated when binding"),
    }
}

fn run_check(c: &BoundCheck, opts: &RunOptions) -> CheckReport {
    let start = Instant::now();
    let mode = if opts.exact { Mode::Exact } else { c.mode };
    let mut result = evaluate(c, mode, &opts.gb);
    let mut fell_back = false;
    if mode == Mode::Exact && c.mode == Mode::Containment {
        if let Err(IdealError::BudgetExceeded { .. }) = result {
            // exact attempt over budget: keep the containment evidence
            result = evaluate(c, Mode::Containment, &opts.gb);
            fell_back = true;
        }
    }
    let millis = start.elapsed().as_millis() as u64;
    let kind = c.kind.name().to_string();
    match result {
        Err(e) => CheckReport {
            name: c.name.clone(),
            kind,
            verdict: Verdict::Error,
            values: BTreeMap::new(),
            millis,
            error: Some(e.to_string()),
        },
        Ok(mut outcome) => {
            if fell_back {
                outcome.values.insert("exact_over_budget".into(), Value::Bool(true));
            }
            let want = match c.expect {
                Expectation::Truth(b) => b,
                Expectation::Count(_) => true,
            };
            let verdict = match outcome.status {
                Status::Undecided => Verdict::Partial,
                Status::Holds if want => Verdict::Pass,
                Status::Fails if !want => Verdict::Pass,
                _ => Verdict::Fail,
            };
            CheckReport { name: c.name.clone(), kind, verdict, values: outcome.values, millis, error: None }
        }
    }
}

//! Scenario-driven verification of linkage and residual-intersection
//! identities, with JSON reports.

mod checks;
mod report;
mod scenario;

pub use checks::{
    check_codim, check_colon_equals, check_geometric_link, check_ideal_equals, check_link, check_mu,
    check_residual_intersection, Mode, Outcome, Status,
};
pub use report::{run_scenario, CheckReport, Report, RunOptions, Summary, Verdict};
pub use scenario::{
    bundled_scenario, BoundCheck, Check, CheckKind, Expectation, ModeSpec, Prepared, RingSpec, Scenario, FORMAT,
};

use crate::families::FamilyError;
use crate::groebner::IdealError;
use crate::poly::PolyError;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("scenario: {0}")]
    Parse(String),
    #[error("scenario: undefined ideal `{0}`")]
    Undefined(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

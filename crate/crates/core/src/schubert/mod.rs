//! Dynkin combinatorics: the walk graph `G_k`, minuscule crystals with
//! their Bruhat order, and the sign-sequence to Pfaffian correspondence.

mod crystal;
mod dot;
mod dynkin;
mod gk;

pub use crystal::{index_sequence, pfaffian_label, spin_schubert_ideal, Crystal, CrystalElement, CrystalKind};
pub use dot::{crystal_to_dot, gk_to_dot};
pub use dynkin::{DynkinDiagram, DynkinType};
pub use gk::{GkGraph, GkNode};

use crate::families::FamilyError;

#[derive(Debug, thiserror::Error)]
pub enum SchubertError {
    #[error("unknown diagram type `{0}`")]
    InvalidType(String),
    #[error("no Dynkin diagram of type {0} and rank {1}")]
    InvalidTypeRank(DynkinType, usize),
    #[error("node {node} outside [1, {rank}]")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("node {0} is not extremal")]
    NotExtremal(usize),
    #[error("diagram has no trivalent node")]
    NoTrivalentNode,
    #[error("arm lengths c = {c}, d = {d}, t = {t} violate 1/(c-1) + 1/(d+1) + 1/(t+1) >= 1")]
    ShapeConstraint { c: usize, d: usize, t: usize },
    #[error("{0}")]
    OutOfRange(String),
    #[error("`{0}` is not an element of the crystal")]
    NotInCrystal(String),
    #[error("operation needs a sign-sequence element")]
    WrongType,
    #[error("crystal rank {expected} does not match matrix size {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// `dynkin(type, rank)`.
pub fn dynkin(kind: DynkinType, rank: usize) -> Result<DynkinDiagram, SchubertError> {
    DynkinDiagram::new(kind, rank)
}

/// `G_k` of the diagram for the start node `k`.
pub fn build_gk(diagram: &DynkinDiagram, k: usize) -> Result<GkGraph, SchubertError> {
    GkGraph::build(diagram, k)
}

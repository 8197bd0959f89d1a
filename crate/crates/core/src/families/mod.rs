//! Constructors for the concrete ideal families: generic and skew-symmetric
//! matrices with their minors and Pfaffians, Schubert ideals on the big cell
//! of `Gr(k, n)`, the Plücker presentation of `Gr(2, n)`, and the bundled
//! E6/E7 datasets.

mod corpus;
mod matrix;
mod pluecker;
mod skew;
mod type_a;

pub use corpus::{bundled_source, e6_dataset, e7_dataset, e7_dataset_with_i2, NamedIdealSet};
pub use matrix::{index_subsets, GenericMatrix, PolyMatrix};
pub use pluecker::PlueckerGr2;
pub use skew::SkewMatrix;
pub use type_a::{BigCell, LeftArmReading};

use crate::groebner::IdealError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("Pfaffian of an odd-size index set ({0} indices)")]
    OddSize(usize),
    #[error("sub-maximal Pfaffians need an odd-size matrix, got {0}")]
    EvenSize(usize),
    #[error("corpus line {line}: {msg}")]
    Corpus { line: usize, msg: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("`{0}` is defined twice")]
    Duplicate(String),
}

//! Exact computer algebra for linkage and residual intersections of
//! opposite Schubert varieties.
//!
//! The crate is organised bottom-up:
//!
//! * [`rational`] and [`poly`]: exact rationals, monomial orders, sparse
//!   polynomials and a parser for polynomial expressions.
//! * [`groebner`]: a Buchberger engine and the ideal calculus built on it
//!   (membership, equality, elimination, intersection, colon ideals,
//!   codimension, minimal generators).
//! * [`families`]: generic and skew-symmetric matrices, minors, Pfaffians,
//!   type-A Schubert ideals, the Plücker ring of `Gr(2, n)` and the bundled
//!   E6/E7 datasets.
//! * [`schubert`]: Dynkin diagrams, the walk graph `G_k`, type-A and spin
//!   crystals and DOT export.
//! * [`verify`]: scenario files, linkage/residual-intersection checks and
//!   JSON reports.

pub mod families;
pub mod groebner;
pub mod poly;
pub mod rational;
pub mod schubert;
pub mod verify;

pub use groebner::{GbConfig, GroebnerBasis, Ideal, IdealError};
pub use poly::{parse_poly, Monomial, MonomialOrder, PolyError, Polynomial, Ring};
pub use rational::Rational;

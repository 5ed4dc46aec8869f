//! Exact-arithmetic invariants of homology cylinders over a once-punctured
//! genus-g surface, at the abelian (N₂) coefficient level.
//!
//! The crate computes, from admissible group presentations:
//! the Magnus representation r₂, the N₂-torsion class, the Alexander
//! rational function, ψ-graded torsion-degree functions, and the
//! factorization identities relating them to the closing and mapping-torus
//! 3-manifolds. Everything is exact: integer Laurent polynomials, their
//! fraction field, and fraction-free elimination throughout.

pub mod error;
pub mod fixtures;
pub mod fracmat;
pub mod gcd;
pub mod intmat;
pub mod invariants;
pub mod nilpotent;
pub mod laurent;
pub mod presentation;
pub mod ratfunc;
pub mod stringlink;
pub mod tpoly;
pub mod word;

pub use error::{Error, Result};
pub use laurent::{Cocharacter, ExpVec, LaurentPoly, Vars};
pub use ratfunc::RatFunc;
pub use word::{boundary_word, fox_derivative, Endomorphism, GroupRingElt, Word};

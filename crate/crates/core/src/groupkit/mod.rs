//! Generic finite-group engine.
//!
//! Groups are enumerated once by [`close`]; afterwards every element is an
//! index ([`Elem`]) and all queries run on indices. Conjugation uses the
//! convention `x^g = g^-1 x g` and commutators are `[a, b] = a^-1 b^-1 a b`.

mod classes;
mod element;
mod frobenius;
mod group;
mod lattice;
mod quotient;
mod structure;
mod subgroup;

pub use classes::ConjugacyClass;
pub use element::GroupElement;
pub use group::{close, Elem, FiniteGroup, DEFAULT_CAP};
pub use lattice::NORMAL_SUBGROUP_CAP;
pub use quotient::QuotientGroup;
pub use subgroup::Subgroup;
